#include <doctest.h>

#include <random>
#include <set>

#include "selfsim/cyclic.hpp"
#include "selfsim/io.hpp"

using namespace selfsim;

namespace {

std::vector<int> word(const std::string& text, int m = 8) { return parse_vertex_word(text, m); }

Automorphism rigid_swap2() {
    // the order-two rigid automorphism (1 2) of the binary tree
    std::vector<Automorphism> id2(2, Automorphism::identity(2));
    return Automorphism::wreath(Permutation::parse("(1 2)", 2), id2);
}

std::mt19937 rng(20240811);

Automorphism random_product(const std::vector<Automorphism>& gens, int len) {
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    Automorphism acc = Automorphism::identity(gens.front().m());
    for (int i = 0; i < len; ++i) {
        Automorphism g = gens[pick(rng)];
        acc = acc.then(coin(rng) ? g : g.inverse());
    }
    return acc;
}

std::vector<int> random_word(int m, int len) {
    std::uniform_int_distribution<int> letter(0, m - 1);
    std::vector<int> w(static_cast<size_t>(len));
    for (auto& y : w) y = letter(rng);
    return w;
}

} // namespace

TEST_CASE("permutation arithmetic and notation") {
    Permutation p = Permutation::parse("(1 2)(3 4)", 4);
    CHECK(p.image_string() == "2 1 4 3");
    CHECK(Permutation::parse("2 1 4 3", 4) == p);
    CHECK(p.then(p).is_identity());
    Permutation c = Permutation::parse("(1 2 3)", 4);
    CHECK(c(0) == 1);
    CHECK(c.order() == 3);
    CHECK(c.then(c.inverse()).is_identity());
    // left-to-right: apply (1 2) first, then (1 3)
    Permutation a = Permutation::parse("(1 2)", 3), b = Permutation::parse("(1 3)", 3);
    CHECK(a.then(b).cycle_string() == "(1 2 3)");
    CHECK(b.then(a).cycle_string() == "(1 3 2)");
    CHECK_THROWS_AS(Permutation::parse("1 1 3", 3), InputError);
}

TEST_CASE("adding machine action") {
    Automorphism a = adding_machine(2);
    CHECK(format_vertex_word(a.act(word("2 2 1", 2))) == "1 1 2");
    CHECK(format_vertex_word(a.act(word("1 1 2", 2))) == "2 1 2");
    Automorphism e = Automorphism::identity(2);
    auto w = word("1 2 2 1", 2);
    CHECK(e.act(w) == w);
    // inverse acts as subtract one
    CHECK(format_vertex_word(a.inverse().act(word("1 1 2", 2))) == "2 2 1");
    CHECK_THROWS_AS(a.act({3}), InputError);
}

TEST_CASE("double adding machine action and sections") {
    Automorphism a = multi_adding_machine(2, 2);
    CHECK(a.root_perm().cycle_string() == "(1 2)(3 4)");
    CHECK(format_vertex_word(a.act(word("3 3", 4))) == "4 3");
    // a_2 = a (self-loop edge 2|1,4|3 in the machine diagram)
    CHECK(a.section(1).equal(a));
    CHECK(a.section(0).equal(Automorphism::identity(4)));
    CHECK(a.section(std::vector<int>{}).equal(a));
}

TEST_CASE("composition follows the right-action convention") {
    Automorphism a = adding_machine(2);
    // a*a = (a, a) with trivial root permutation
    Automorphism sq = a.then(a);
    CHECK(sq.root_perm().is_identity());
    CHECK(sq.section(0).equal(a));
    CHECK(sq.section(1).equal(a));
    // the result equals the diagonal image of a
    OrbitPartition whole{2, {{0, 1}}};
    CHECK(sq.equal(x_i(a, whole, 0)));

    Automorphism d = multi_adding_machine(2, 2);
    Automorphism dsq = d.then(d);
    CHECK(dsq.root_perm().is_identity());
    for (int y = 0; y < 4; ++y) CHECK(dsq.section(y).equal(d));

    // identity is neutral
    CHECK(Automorphism::identity(2).then(a).equal(a));
    CHECK_THROWS_AS(a.then(Automorphism::identity(4)), InputError);
}

TEST_CASE("act is a homomorphism for products") {
    std::vector<Automorphism> gens = {adding_machine(2), rigid_swap2()};
    for (int trial = 0; trial < 30; ++trial) {
        Automorphism x = random_product(gens, 4);
        Automorphism y = random_product(gens, 4);
        auto w = random_word(2, 8);
        CHECK(x.then(y).act(w) == y.act(x.act(w)));
    }
}

TEST_CASE("inverse cancels and is an involution") {
    std::vector<Automorphism> gens = {multi_adding_machine(2, 2)};
    for (int trial = 0; trial < 10; ++trial) {
        Automorphism x = random_product(gens, 3);
        CHECK(x.then(x.inverse()).portrait(4) == Portrait::identity(4, 4));
        CHECK(x.inverse().inverse().equal(x));
    }
}

TEST_CASE("section homomorphism at level one") {
    std::vector<Automorphism> gens = {multi_adding_machine(2, 2)};
    for (int trial = 0; trial < 10; ++trial) {
        Automorphism x = random_product(gens, 3);
        Automorphism y = random_product(gens, 3);
        for (int letter = 0; letter < 4; ++letter) {
            Automorphism lhs = x.then(y).section(letter);
            Automorphism rhs = x.section(letter).then(y.section(x.root_perm()(letter)));
            CHECK(lhs.equal_at_depth(rhs, 5));
        }
    }
}

TEST_CASE("section composes along words") {
    Automorphism a = multi_adding_machine(2, 2);
    auto u = word("2 1", 4);
    auto v = word("2", 4);
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(a.section(uv).equal(a.section(u).section(v)));
}

TEST_CASE("states of catalog machines") {
    CHECK(multi_adding_machine(2, 2).state_count() == 2);
    CHECK(Automorphism::identity(3).state_count() == 1);
    CHECK(adding_machine(2).state_count() == 2);
    // states are closed under sections
    Automorphism a = multi_adding_machine(2, 2);
    auto sts = a.states();
    for (const auto& s : sts)
        for (int y = 0; y < 4; ++y) {
            bool member = false;
            for (const auto& t : sts)
                if (t.equal(s.section(y))) member = true;
            CHECK(member);
        }
}

TEST_CASE("portrait equality and truncation") {
    Automorphism a = adding_machine(2);
    OrbitPartition whole{2, {{0, 1}}};
    // a^2 = a^x at every depth
    for (int d = 0; d <= 6; ++d)
        CHECK(a.pow(2).equal_at_depth(x_i(a, whole, 0), d));
    CHECK_FALSE(a.equal_at_depth(Automorphism::identity(2), 1));
    CHECK(a.equal_at_depth(a, 8));
    CHECK(a.pow(1 << 4).is_trivial_at_depth(4));
    CHECK_FALSE(a.pow(1 << 3).is_trivial_at_depth(4));
}

TEST_CASE("portrait arithmetic matches automorphism arithmetic") {
    std::vector<Automorphism> gens = {multi_adding_machine(2, 2), adding_machine(4)};
    for (int trial = 0; trial < 12; ++trial) {
        Automorphism x = random_product(gens, 3);
        Automorphism y = random_product(gens, 3);
        CHECK(x.portrait(4).then(y.portrait(4)) == x.then(y).portrait(4));
        CHECK(x.portrait(4).inverse() == x.inverse().portrait(4));
        auto w = random_word(4, 4);
        CHECK(x.portrait(4).apply(w) == x.act(w));
    }
}

TEST_CASE("minimize collapses bisimilar states") {
    // two copies of the identity collapse to one state
    std::vector<AutState> sts(3);
    for (auto& s : sts) {
        s.perm = Permutation(2);
        s.child = {1, 1};
    }
    sts[1].child = {1, 1};
    sts[2].child = {2, 2};
    Automaton dup(2, sts, 2);
    CHECK(dup.minimized().size() == 1);

    // product of a and its inverse minimizes to the identity alone
    Automorphism a = adding_machine(2);
    auto extracted = a.then(a.inverse()).to_automaton();
    CHECK(extracted.automaton->minimized().size() == 1);

    // minimization preserves the action
    Automorphism d = multi_adding_machine(2, 2);
    auto canon = d.then(d).canonical();
    Automorphism min = Automorphism::from_automaton(canon.automaton, canon.init);
    for (int trial = 0; trial < 20; ++trial) {
        auto w = random_word(4, 6);
        CHECK(min.act(w) == d.then(d).act(w));
    }
}

TEST_CASE("equality is bisimulation") {
    Automorphism a = adding_machine(2);
    CHECK(a.equal(a));
    CHECK_FALSE(a.equal(a.inverse()));
    CHECK(a.pow(3).then(a.pow(-3)).equal(Automorphism::identity(2)));
}

TEST_CASE("serialization round trip is the canonical form") {
    Automorphism a = multi_adding_machine(2, 2);
    std::string text = serialize_automorphism(a);
    Automorphism back = parse_automorphism(text);
    CHECK(back.equal(a));
    CHECK(serialize_automorphism(back) == text);

    // a hand-written file with implied identity state
    std::string file = "m 2\nstate a perm (1 2) to e a\ninit a\n";
    Automorphism odo = parse_automorphism(file);
    CHECK(odo.equal(adding_machine(2)));

    std::string rigid = "m 2\nstate s perm 2 1 to e e\ninit s\n";
    CHECK(parse_automorphism(rigid).equal(rigid_swap2()));

    CHECK_THROWS_AS(parse_automorphism("m 2\ninit a\n"), InputError);
    CHECK_THROWS_AS(parse_automorphism("m 2\nstate a perm 1 1 to e e\ninit a\n"), InputError);
}

TEST_CASE("lazy automata evaluate recursively defined machines") {
    // binary adding machine, written as a lazy recursion over power ids
    auto lazy = std::make_shared<LazyAutomaton>(2, [](int64_t id) {
        LazyAutomaton::StateDef def;
        if (id == 0) {
            def.perm = Permutation(2);
            def.child = {0, 0};
        } else {
            def.perm = Permutation::parse("(1 2)", 2);
            def.child = {0, 1};
        }
        return def;
    });
    Automorphism a = Automorphism::from_lazy(lazy, 1);
    CHECK(a.equal(adding_machine(2)));

    // budget guard kicks in for machines with unbounded state sets
    auto runaway = std::make_shared<LazyAutomaton>(2, [](int64_t id) {
        LazyAutomaton::StateDef def;
        def.perm = Permutation::parse("(1 2)", 2);
        def.child = {id + 1, id + 2};
        return def;
    }, 0, 64);
    Automorphism r = Automorphism::from_lazy(runaway, 1);
    CHECK_THROWS_AS(r.portrait(12), ResourceError);
}

TEST_CASE("state bound guards extraction") {
    CyclicMachine doubling(Permutation::parse("(1 2)", 2), {2, 2});
    // a = (a^2, a^2)(1 2) has infinitely many states
    CHECK_THROWS_AS(doubling.element().to_automaton(100), ResourceError);
}

TEST_CASE("portrait count sanity") {
    std::vector<Automorphism> gens = {adding_machine(2), rigid_swap2()};
    std::set<Portrait> seen;
    for (int trial = 0; trial < 200; ++trial)
        seen.insert(random_product(gens, 5).portrait(3));
    CHECK(seen.size() <= 128); // ambient order (2!)^{1+2+4}
}
