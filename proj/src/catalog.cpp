#include "selfsim/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "selfsim/cyclic.hpp"
#include "selfsim/io.hpp"
#include "selfsim/truncated.hpp"

namespace selfsim {

namespace {

int param_int(const CatalogParams& params, const std::string& key, int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    return std::stoi(it->second);
}

std::vector<long long> param_list(const CatalogParams& params, const std::string& key) {
    auto it = params.find(key);
    std::vector<long long> out;
    if (it == params.end()) return out;
    std::string s = it->second;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    long long v = 0;
    while (in >> v) out.push_back(v);
    return out;
}

std::string join_params(const CatalogParams& params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << ',';
        os << k << '=' << v;
        first = false;
    }
    return os.str();
}

} // namespace

Report CatalogEntry::self_check(int depth, int word_len) const {
    Report rep;
    OrbitPartition part = activity_orbits(generators);
    rep.check(part.orbit_type() == orbit_type, name + ": orbit type matches");
    if (abelian) {
        bool ok = true;
        for (size_t i = 0; i < generators.size(); ++i)
            for (size_t j = i + 1; j < generators.size(); ++j)
                if (!commute_at_depth(generators[i], generators[j], depth)) ok = false;
        rep.check(ok, name + ": generators commute at depth " + std::to_string(depth));
    }
    if (self_similar) {
        // membership of every state in the ball of the generated group
        std::set<Portrait> ball;
        std::vector<Automorphism> frontier = {Automorphism::identity(generators.front().m())};
        ball.insert(frontier.front().portrait(depth));
        for (int l = 0; l < word_len; ++l) {
            std::vector<Automorphism> next;
            for (const auto& w : frontier)
                for (const auto& g : generators)
                    for (const Automorphism& prod : {w.then(g), w.then(g.inverse())})
                        if (ball.insert(prod.portrait(depth)).second) next.push_back(prod);
            frontier = std::move(next);
        }
        bool closed = true;
        for (const auto& g : generators) {
            std::vector<Automorphism> level = {g};
            for (int t = 0; t < 2 && closed; ++t) {
                std::vector<Automorphism> next;
                for (const auto& s : level)
                    for (int y = 0; y < s.m(); ++y) next.push_back(s.section(y));
                for (const auto& s : next)
                    if (!ball.count(s.portrait(depth))) closed = false;
                level = std::move(next);
            }
        }
        rep.check(closed, name + ": states lie in the generated group (depth " +
                              std::to_string(depth) + ")");
    }
    return rep;
}

CatalogEntry catalog(const std::string& name, const CatalogParams& params) {
    CatalogEntry e;
    e.name = name;
    e.params = join_params(params);
    if (name == "adding") {
        int m = param_int(params, "m", 2);
        e.generators = {adding_machine(m)};
        e.orbit_type = {m};
    } else if (name == "double-adding") {
        e.generators = {multi_adding_machine(2, 2)};
        e.orbit_type = {2, 2};
    } else if (name == "multi-adding") {
        int m = param_int(params, "m", 2);
        int s = param_int(params, "s", 2);
        e.generators = {multi_adding_machine(m, s)};
        e.orbit_type.assign(static_cast<size_t>(s), m);
    } else if (name == "t4-cyclic") {
        auto type = param_list(params, "type");
        auto exps = param_list(params, "exps");
        if (exps.size() != 4) throw InputError("t4-cyclic needs exps=i1,i2,i3,i4");
        std::vector<int> ot(type.begin(), type.end());
        Permutation sigma(4);
        if (ot == std::vector<int>{2, 2}) sigma = Permutation::parse("(1 2)(3 4)", 4);
        else if (ot == std::vector<int>{2, 1, 1}) sigma = Permutation::parse("(1 2)", 4);
        else if (ot == std::vector<int>{3, 1}) sigma = Permutation::parse("(1 2 3)", 4);
        else throw InputError("t4-cyclic type must be 2,2 or 2,1,1 or 3,1");
        CyclicMachine machine(sigma, exps);
        e.generators = {machine.element()};
        e.orbit_type = ot;
        // reject exponent vectors whose states escape the cyclic group
        OrbitPartition part = activity_orbits(e.generators);
        cyclic_centralizer(e.generators.front(), part, 2);
    } else if (name == "rigid") {
        int m = param_int(params, "m", 2);
        std::string cycles = params.count("perm") ? params.at("perm") : "(1 2)";
        Permutation sigma = Permutation::parse(cycles, m);
        std::vector<Automorphism> ids(static_cast<size_t>(m), Automorphism::identity(m));
        e.generators = {Automorphism::wreath(sigma, ids)};
        e.orbit_type = orbits(PermGroup(m, {sigma})).orbit_type();
    } else if (name == "thmc-infinite-rank" || name == "thmc-finite-extension") {
        int m = param_int(params, "m", 2);
        long long index = param_int(params, "index", 1);
        FamilyVariant variant = name == "thmc-infinite-rank" ? FamilyVariant::InfiniteRank
                                                             : FamilyVariant::FiniteExtension;
        IndexMapFamily family(m, variant);
        e.generators = {family.realize(index)};
        e.orbit_type = {m, 1};
    } else {
        throw InputError("unknown catalog entry: " + name);
    }
    return e;
}

std::vector<std::string> catalog_names() {
    return {"adding",    "double-adding",      "multi-adding",
            "t4-cyclic", "rigid",              "thmc-infinite-rank",
            "thmc-finite-extension"};
}

GDataSpec adding_machine_data(int m) {
    GDataSpec d;
    d.n = 1;
    d.block_sizes = {m};
    Lattice h = Lattice::from_rows(1, {{Int(m)}});
    d.subgroups = {h};
    d.maps = {VirtualEndo{h, {{Rat(1, m)}}}};
    d.transversals = {GDataSpec::default_transversal(h)};
    d.validate();
    return d;
}

GDataSpec double_adding_machine_data() {
    GDataSpec d;
    d.n = 1;
    d.block_sizes = {2, 2};
    Lattice h = Lattice::from_rows(1, {{Int(2)}});
    d.subgroups = {h, h};
    d.maps = {VirtualEndo{h, {{Rat(1, 2)}}}, VirtualEndo{h, {{Rat(1, 2)}}}};
    d.transversals = {GDataSpec::default_transversal(h), GDataSpec::default_transversal(h)};
    d.validate();
    return d;
}

Automorphism resolve_automorphism(const std::string& spec) {
    if (spec.rfind("catalog:", 0) != 0) return load_automorphism(spec);
    std::string rest = spec.substr(8);
    CatalogParams params;
    std::string name = rest;
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
        name = rest.substr(0, colon);
        std::string plist = rest.substr(colon + 1);
        std::istringstream in(plist);
        std::string item;
        while (std::getline(in, item, ';')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InputError("catalog parameter needs key=value");
            params[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    CatalogEntry entry = catalog(name, params);
    return entry.generators.front();
}

} // namespace selfsim
