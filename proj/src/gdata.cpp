#include "selfsim/gdata.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace selfsim {

int GDataSpec::m() const {
    return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

void GDataSpec::validate() const {
    if (n < 1) throw InputError("rank must be positive");
    const size_t s = block_sizes.size();
    if (subgroups.size() != s || maps.size() != s || transversals.size() != s)
        throw InputError("inconsistent number of orbit blocks");
    for (size_t i = 0; i < s; ++i) {
        const Lattice& h = subgroups[i];
        if (h.dim() != n) throw InputError("subgroup dimension mismatch");
        auto idx = h.index();
        if (!idx) throw InputError("subgroup does not have finite index");
        if (*idx != block_sizes[i]) throw InputError("declared index does not match the subgroup");
        if (!(maps[i].domain == h)) throw InputError("virtual endomorphism domain mismatch");
        if (!maps[i].integral_on_domain())
            throw InputError("virtual endomorphism is not integral on its domain");
        if (static_cast<int>(transversals[i].size()) != block_sizes[i])
            throw InputError("transversal size does not match the index");
        for (size_t a = 0; a < transversals[i].size(); ++a)
            for (size_t b = a + 1; b < transversals[i].size(); ++b) {
                IntVec diff(static_cast<size_t>(n));
                for (size_t j = 0; j < diff.size(); ++j)
                    diff[j] = transversals[i][a][j] - transversals[i][b][j];
                if (h.contains(diff))
                    throw InputError("transversal representatives are congruent modulo H");
            }
    }
}

std::vector<IntVec> GDataSpec::default_transversal(const Lattice& h) {
    auto idx = h.index();
    if (!idx) throw InputError("transversal needs a finite-index subgroup");
    const int n = h.dim();
    std::vector<IntVec> out;
    IntVec digits(static_cast<size_t>(n), 0);
    for (;;) {
        out.push_back(digits);
        int j = n - 1;
        while (j >= 0) {
            digits[static_cast<size_t>(j)] += 1;
            if (digits[static_cast<size_t>(j)] <
                h.basis()[static_cast<size_t>(j)][static_cast<size_t>(j)])
                break;
            digits[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

size_t GDataSpec::reduce_to(const Lattice& h, const std::vector<IntVec>& transversal,
                            const IntVec& v) {
    for (size_t k = 0; k < transversal.size(); ++k) {
        IntVec diff(v.size());
        for (size_t j = 0; j < v.size(); ++j) diff[j] = v[j] - transversal[k][j];
        if (h.contains(diff)) return k;
    }
    throw InputError("transversal does not cover the coset");
}

FCoreResult f_core(const GDataSpec& d, Int index_bound, int max_iter) {
    d.validate();
    FCoreResult out;
    Lattice k = Lattice::standard(d.n);
    for (const auto& h : d.subgroups) k = intersect(k, h);
    Int prev_gcd = 0;
    bool gcd_monotone = true;
    int monotone_steps = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        out.iterations = iter;
        Lattice next = k;
        for (const auto& f : d.maps) next = intersect(next, f.preimage(k));
        if (next == k) {
            out.core = k;
            out.verdict = k.is_zero() ? CoreVerdict::Trivial : CoreVerdict::Nontrivial;
            out.detail = "chain stabilized";
            return out;
        }
        if (next.rank() != k.rank()) {
            prev_gcd = 0;
            gcd_monotone = true;
            monotone_steps = 0;
        }
        if (next.is_zero()) {
            out.core = next;
            out.verdict = CoreVerdict::Trivial;
            out.detail = "chain reached the zero lattice";
            return out;
        }
        Int g = next.entry_gcd();
        if (prev_gcd != 0) {
            if (g > prev_gcd)
                ++monotone_steps;
            else {
                gcd_monotone = false;
                monotone_steps = 0;
            }
        }
        prev_gcd = g;
        k = next;
        auto idx = k.index();
        bool past_bound = idx && *idx > index_bound;
        if ((past_bound || iter == max_iter - 1)) {
            out.core = k;
            if (gcd_monotone && monotone_steps >= 3 && g > 1) {
                // every vector of the limit is divisible by the growing
                // elementary divisor, so the limit is trivial
                out.verdict = CoreVerdict::Trivial;
                out.detail = "strictly growing divisibility chain";
            } else {
                out.verdict = CoreVerdict::Unknown;
                out.detail = "chain did not stabilize within the bound";
            }
            return out;
        }
    }
    out.verdict = CoreVerdict::Unknown;
    out.detail = "iteration cap reached";
    return out;
}

Tri is_recurrent(const GDataSpec& d) {
    d.validate();
    const Lattice full = Lattice::standard(d.n);
    for (const auto& f : d.maps)
        if (!(f.image() == full)) return Tri::False;
    switch (f_core(d).verdict) {
        case CoreVerdict::Trivial: return Tri::True;
        case CoreVerdict::Nontrivial: return Tri::False;
        default: return Tri::Unknown;
    }
}

Tri is_strongly_recurrent(const GDataSpec& d) {
    d.validate();
    const Lattice full = Lattice::standard(d.n);
    Tri acc = is_recurrent(d);
    if (acc == Tri::False) return Tri::False;
    for (size_t i = 0; i < d.maps.size(); ++i) {
        Lattice restricted = d.subgroups[i];
        for (size_t j = 0; j < d.maps.size(); ++j)
            if (j != i) restricted = intersect(restricted, d.maps[j].kernel_lattice());
        Tri onto = d.maps[i].image_of(restricted) == full ? Tri::True : Tri::False;
        acc = tri_and(acc, onto);
        if (acc == Tri::False) return Tri::False;
    }
    return acc;
}

namespace {

struct VecRegistry {
    std::mutex mu;
    std::map<IntVec, int64_t> ids;
    std::vector<IntVec> vecs;

    int64_t intern(IntVec v) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = ids.find(v);
        if (it != ids.end()) return it->second;
        int64_t id = static_cast<int64_t>(vecs.size());
        ids.emplace(v, id);
        vecs.push_back(std::move(v));
        return id;
    }
    IntVec get(int64_t id) {
        std::lock_guard<std::mutex> lock(mu);
        return vecs[static_cast<size_t>(id)];
    }
};

} // namespace

Automorphism induced_element(const GDataSpec& d, const IntVec& g, size_t memo_budget) {
    d.validate();
    auto spec = std::make_shared<GDataSpec>(d);
    auto reg = std::make_shared<VecRegistry>();
    const int m = d.m();
    int64_t zero = reg->intern(IntVec(static_cast<size_t>(d.n), 0));
    auto gen = [spec, reg](int64_t id) {
        IntVec v = reg->get(id);
        const int n = spec->n;
        LazyAutomaton::StateDef def;
        std::vector<int> img(static_cast<size_t>(spec->m()));
        def.child.resize(static_cast<size_t>(spec->m()));
        int offset = 0;
        for (int i = 0; i < spec->s(); ++i) {
            const auto& h = spec->subgroups[static_cast<size_t>(i)];
            const auto& tr = spec->transversals[static_cast<size_t>(i)];
            for (size_t k = 0; k < tr.size(); ++k) {
                IntVec moved(static_cast<size_t>(n));
                for (size_t j = 0; j < moved.size(); ++j) moved[j] = tr[k][j] + v[j];
                size_t l = GDataSpec::reduce_to(h, tr, moved);
                img[static_cast<size_t>(offset) + k] = offset + static_cast<int>(l);
                IntVec inside(static_cast<size_t>(n));
                for (size_t j = 0; j < inside.size(); ++j) inside[j] = moved[j] - tr[l][j];
                def.child[static_cast<size_t>(offset) + k] =
                    reg->intern(spec->maps[static_cast<size_t>(i)].apply(inside));
            }
            offset += static_cast<int>(tr.size());
        }
        def.perm = Permutation::from_images(img);
        return def;
    };
    auto aut = std::make_shared<LazyAutomaton>(m, gen, zero, memo_budget);
    return Automorphism::from_lazy(aut, reg->intern(g));
}

std::vector<Automorphism> induced_representation(const GDataSpec& d, size_t memo_budget) {
    std::vector<Automorphism> out;
    for (int i = 0; i < d.n; ++i) {
        IntVec e(static_cast<size_t>(d.n), 0);
        e[static_cast<size_t>(i)] = 1;
        out.push_back(induced_element(d, e, memo_budget));
    }
    return out;
}

namespace {

Rat parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rat(Int(tok));
    return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
}

} // namespace

GDataSpec parse_gdata(const std::string& text) {
    std::istringstream in(text);
    GDataSpec d;
    std::string line;
    enum class Mode { None, H, F, Transversal } mode = Mode::None;
    IntMatrix hrows;
    RatMatrix frows;
    std::vector<IntVec> trows;
    auto flush_block = [&]() {
        if (d.block_sizes.empty()) return;
        if (hrows.empty()) throw InputError("orbit block missing H rows");
        if (frows.size() != static_cast<size_t>(d.n)) throw InputError("orbit block needs n rows of f");
        Lattice h = Lattice::from_rows(d.n, hrows);
        d.subgroups.push_back(h);
        d.maps.push_back(VirtualEndo{h, frows});
        if (trows.empty())
            d.transversals.push_back(GDataSpec::default_transversal(h));
        else
            d.transversals.push_back(trows);
        hrows.clear();
        frows.clear();
        trows.clear();
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key.empty() || key[0] == '#') continue;
        if (key == "rank") {
            if (!(ls >> d.n) || d.n < 1) throw InputError("bad rank line");
        } else if (key == "orbit") {
            if (!d.block_sizes.empty()) flush_block();
            else if (!hrows.empty() || !frows.empty())
                throw InputError("orbit data before the first orbit line");
            int num = 0, idx = 0;
            std::string kw;
            if (!(ls >> num >> kw >> idx) || kw != "index") throw InputError("bad orbit line");
            if (num != static_cast<int>(d.block_sizes.size()) + 1)
                throw InputError("orbit blocks must be numbered consecutively");
            d.block_sizes.push_back(idx);
            mode = Mode::None;
        } else if (key == "H") {
            mode = Mode::H;
        } else if (key == "f") {
            mode = Mode::F;
        } else if (key == "transversal") {
            mode = Mode::Transversal;
        } else {
            // a data row: first token is already read
            if (d.n < 1) throw InputError("data row before the rank line");
            std::vector<std::string> toks = {key};
            std::string tok;
            while (ls >> tok) toks.push_back(tok);
            if (static_cast<int>(toks.size()) != d.n) throw InputError("data row has wrong length");
            if (mode == Mode::H) {
                IntVec row;
                for (const auto& t : toks) row.emplace_back(t);
                hrows.push_back(std::move(row));
            } else if (mode == Mode::F) {
                std::vector<Rat> row;
                for (const auto& t : toks) row.push_back(parse_rational(t));
                frows.push_back(std::move(row));
            } else if (mode == Mode::Transversal) {
                IntVec row;
                for (const auto& t : toks) row.emplace_back(t);
                trows.push_back(std::move(row));
            } else {
                throw InputError("data row outside any section: " + line);
            }
        }
    }
    flush_block();
    d.validate();
    return d;
}

std::string serialize_gdata(const GDataSpec& d) {
    std::ostringstream os;
    os << "rank " << d.n << "\n";
    for (int i = 0; i < d.s(); ++i) {
        os << "orbit " << i + 1 << " index " << d.block_sizes[static_cast<size_t>(i)] << "\n";
        os << "H\n";
        for (const auto& row : d.subgroups[static_cast<size_t>(i)].basis()) {
            for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
            os << "\n";
        }
        os << "f\n";
        for (const auto& row : d.maps[static_cast<size_t>(i)].matrix) {
            for (size_t j = 0; j < row.size(); ++j) {
                if (j) os << ' ';
                os << row[j].numerator();
                if (row[j].denominator() != 1) os << '/' << row[j].denominator();
            }
            os << "\n";
        }
        os << "transversal\n";
        for (const auto& row : d.transversals[static_cast<size_t>(i)]) {
            for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
            os << "\n";
        }
    }
    return os.str();
}

GDataSpec load_gdata(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open gdata file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gdata(buf.str());
}

} // namespace selfsim
