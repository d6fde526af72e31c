#pragma once

#include <string>
#include <vector>

#include "bloch/descriptor.hpp"

namespace bloch::cli {

class UnknownCatalogEntry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
    std::string pattern;     // e.g. "kernel:B:P"
    std::string description; // the role the function plays
};

const std::vector<CatalogEntry>& catalog_entries();

/// Descriptor for a catalog name such as "eta", "f-beta:0.5" or "kernel:0.9:2".
/// Throws UnknownCatalogEntry listing the available patterns.
Json catalog(const std::string& name);

} // namespace bloch::cli
