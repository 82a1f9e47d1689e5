#pragma once

#include <map>
#include <string>
#include <vector>

#include "selfsim/families.hpp"
#include "selfsim/gdata.hpp"

namespace selfsim {

// Named example machines with their expected structure. Every entry
// self-checks its declared properties at small depth.
struct CatalogEntry {
    std::string name;
    std::string params;
    std::vector<Automorphism> generators;
    std::vector<int> orbit_type;
    bool self_similar = true;
    bool abelian = true;

    Report self_check(int depth = 4, int word_len = 6) const;
};

using CatalogParams = std::map<std::string, std::string>;

// names: adding, double-adding, multi-adding, t4-cyclic, rigid,
// thmc-infinite-rank, thmc-finite-extension
CatalogEntry catalog(const std::string& name, const CatalogParams& params = {});
std::vector<std::string> catalog_names();

// the A-data of the double adding machine and of the m-adic odometer
GDataSpec adding_machine_data(int m);
GDataSpec double_adding_machine_data();

// resolve "catalog:name[:key=value,...]" or a file path into an automorphism
Automorphism resolve_automorphism(const std::string& spec);

} // namespace selfsim
