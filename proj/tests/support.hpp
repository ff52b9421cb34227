#pragma once

#include <string>

#include "doctest.h"
#include "modcat/catalog.hpp"
#include "modcat/error.hpp"

namespace support {

/// Kind of the modcat::Error thrown by f; fails the test when nothing is thrown.
modcat::ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const modcat::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return modcat::ErrorKind::ParseError;
}

/// RNG seed for property tests: `--rand-seed=<n>` on the command line shifts
/// every generator; the default (0) keeps runs reproducible.
inline unsigned seed(unsigned salt) { return doctest::getContextOptions()->rand_seed + salt; }

inline const std::vector<modcat::CatalogEntry>& catalog() {
  static const std::vector<modcat::CatalogEntry> entries = modcat::catalog_entries();
  return entries;
}

}  // namespace support
