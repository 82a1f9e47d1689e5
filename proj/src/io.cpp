#include "selfsim/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

std::string serialize_automorphism(const Automorphism& a, size_t state_bound) {
    auto c = a.canonical(state_bound);
    const Automaton& aut = *c.automaton;
    std::ostringstream out;
    out << "m " << aut.m() << "\n";
    for (uint32_t i = 0; i < aut.size(); ++i) {
        if (i == aut.identity_index()) continue; // implied
        const AutState& s = aut.state(i);
        out << "state " << s.name << " perm " << s.perm.image_string() << " to";
        for (uint32_t ch : s.child) out << ' ' << aut.state(ch).name;
        out << "\n";
    }
    out << "init " << aut.state(c.init).name << "\n";
    return out.str();
}

Automorphism parse_automorphism(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int m = -1;
    struct RawState {
        Permutation perm;
        std::vector<std::string> child;
    };
    std::map<std::string, RawState> raw;
    std::vector<std::string> order;
    std::string init;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key.empty() || key[0] == '#') continue;
        if (key == "m") {
            if (!(ls >> m) || m < 1) throw InputError("bad alphabet size line");
        } else if (key == "state") {
            if (m < 1) throw InputError("state line before alphabet size");
            std::string name, kw;
            if (!(ls >> name >> kw) || kw != "perm") throw InputError("bad state line");
            std::vector<int> img;
            std::string tok;
            std::ostringstream permtext;
            bool saw_to = false;
            while (ls >> tok) {
                if (tok == "to") { saw_to = true; break; }
                permtext << tok << ' ';
            }
            if (!saw_to) throw InputError("state line missing child list");
            RawState rs;
            rs.perm = Permutation::parse(permtext.str(), m);
            while (ls >> tok) rs.child.push_back(tok);
            if (static_cast<int>(rs.child.size()) != m)
                throw InputError("state line has wrong number of children");
            if (raw.count(name)) throw InputError("duplicate state name: " + name);
            raw.emplace(name, std::move(rs));
            order.push_back(name);
        } else if (key == "init") {
            if (!(ls >> init)) throw InputError("bad init line");
        } else {
            throw InputError("unrecognized line: " + line);
        }
    }
    if (m < 1) throw InputError("missing alphabet size");
    if (init.empty()) throw InputError("missing init line");
    if (!raw.count("e")) {
        RawState e;
        e.perm = Permutation(m);
        e.child.assign(static_cast<size_t>(m), "e");
        raw.emplace("e", std::move(e));
        order.push_back("e");
    }
    std::map<std::string, uint32_t> id;
    for (size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<uint32_t>(i);
    std::vector<AutState> states;
    states.reserve(order.size());
    for (const auto& name : order) {
        const RawState& rs = raw.at(name);
        AutState s;
        s.perm = rs.perm;
        s.name = name;
        for (const auto& ch : rs.child) {
            auto it = id.find(ch);
            if (it == id.end()) throw InputError("unknown child state: " + ch);
            s.child.push_back(it->second);
        }
        states.push_back(std::move(s));
    }
    if (!id.count(init)) throw InputError("unknown init state: " + init);
    auto aut = std::make_shared<Automaton>(m, std::move(states), id.at("e"));
    return Automorphism::from_automaton(aut, id.at(init));
}

Automorphism load_automorphism(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open automaton file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automorphism(buf.str());
}

std::vector<int> parse_vertex_word(const std::string& text, int m) {
    std::istringstream in(text);
    std::vector<int> out;
    int v = 0;
    while (in >> v) {
        if (v < 1 || v > m) throw InputError("letter out of range in vertex word");
        out.push_back(v - 1);
    }
    return out;
}

std::string format_vertex_word(const std::vector<int>& word) {
    std::ostringstream out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out << ' ';
        out << word[i] + 1;
    }
    return out.str();
}

} // namespace selfsim
