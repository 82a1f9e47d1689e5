#include "selfsim/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

Int fdiv(const Int& a, const Int& b) {
    // floor division, b > 0
    Int q = a / b, r = a % b;
    if (r < 0) --q;
    return q;
}

void row_axpy(IntVec& target, const Int& c, const IntVec& src) {
    for (size_t j = 0; j < target.size(); ++j) target[j] -= c * src[j];
}

} // namespace

std::pair<IntMatrix, IntMatrix> hnf_with_transform(IntMatrix rows) {
    const size_t nrows = rows.size();
    const size_t ncols = nrows ? rows[0].size() : 0;
    IntMatrix u(nrows, IntVec(nrows, 0));
    for (size_t i = 0; i < nrows; ++i) u[i][i] = 1;
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < nrows; ++col) {
        // gcd-reduce the column below row r
        for (;;) {
            size_t best = nrows;
            for (size_t i = r; i < nrows; ++i) {
                if (rows[i][col] == 0) continue;
                if (best == nrows || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == nrows) break;
            std::swap(rows[r], rows[best]);
            std::swap(u[r], u[best]);
            if (rows[r][col] < 0) {
                for (auto& x : rows[r]) x = -x;
                for (auto& x : u[r]) x = -x;
            }
            bool cleared = true;
            for (size_t i = r + 1; i < nrows; ++i) {
                if (rows[i][col] == 0) continue;
                Int q = fdiv(rows[i][col], rows[r][col]);
                row_axpy(rows[i], q, rows[r]);
                row_axpy(u[i], q, u[r]);
                if (rows[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[r][col] != 0) {
            for (size_t i = 0; i < r; ++i) {
                Int q = fdiv(rows[i][col], rows[r][col]);
                row_axpy(rows[i], q, rows[r]);
                row_axpy(u[i], q, u[r]);
            }
            ++r;
        }
    }
    IntMatrix h(rows.begin(), rows.begin() + static_cast<long>(r));
    // keep the kernel rows of u behind the basis rows
    IntMatrix uu = u;
    return {h, uu};
}

IntMatrix hnf(IntMatrix rows) { return hnf_with_transform(std::move(rows)).first; }

IntMatrix int_kernel(const IntMatrix& m) {
    auto [h, u] = hnf_with_transform(m);
    IntMatrix kernel(u.begin() + static_cast<long>(h.size()), u.end());
    return hnf(std::move(kernel));
}

Lattice Lattice::standard(int dim) {
    IntMatrix rows(static_cast<size_t>(dim), IntVec(static_cast<size_t>(dim), 0));
    for (int i = 0; i < dim; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return from_rows(dim, std::move(rows));
}

Lattice Lattice::from_rows(int dim, IntMatrix rows) {
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != dim) throw InputError("lattice row length mismatch");
    Lattice l(dim);
    l.basis_ = hnf(std::move(rows));
    return l;
}

std::optional<Int> Lattice::index() const {
    if (rank() != dim_) return std::nullopt;
    Int det = 1;
    // HNF of a full-rank lattice is square upper triangular
    for (int i = 0; i < dim_; ++i) det *= basis_[static_cast<size_t>(i)][static_cast<size_t>(i)];
    return abs(det);
}

bool Lattice::contains(const IntVec& v) const {
    if (static_cast<int>(v.size()) != dim_) throw InputError("vector dimension mismatch");
    IntVec w = v;
    for (const auto& row : basis_) {
        size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size()) continue;
        if (w[pivot] % row[pivot] != 0) {
            // no further row can touch this column
            if (w[pivot] != 0) return false;
            continue;
        }
        Int q = w[pivot] / row[pivot];
        for (size_t j = 0; j < w.size(); ++j) w[j] -= q * row[j];
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

bool Lattice::contains(const Lattice& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

Int Lattice::entry_gcd() const {
    Int g = 0;
    for (const auto& row : basis_)
        for (const auto& x : row) g = gcd(g, x);
    return g;
}

Lattice Lattice::scaled(const Int& d) const {
    IntMatrix rows = basis_;
    for (auto& row : rows)
        for (auto& x : row) x *= d;
    return from_rows(dim_, std::move(rows));
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw InputError("lattice dimension mismatch");
    if (a.is_zero() || b.is_zero()) return Lattice(a.dim());
    const size_t ra = a.basis().size(), rb = b.basis().size();
    IntMatrix stacked;
    stacked.reserve(ra + rb);
    for (const auto& row : a.basis()) stacked.push_back(row);
    for (const auto& row : b.basis()) stacked.push_back(row);
    IntMatrix kernel = int_kernel(stacked);
    IntMatrix rows;
    for (const auto& k : kernel) {
        IntVec v(static_cast<size_t>(a.dim()), 0);
        for (size_t i = 0; i < ra; ++i)
            for (size_t j = 0; j < v.size(); ++j) v[j] += k[i] * a.basis()[i][j];
        rows.push_back(std::move(v));
    }
    return Lattice::from_rows(a.dim(), std::move(rows));
}

bool VirtualEndo::integral_on_domain() const {
    for (const auto& row : domain.basis()) {
        for (size_t j = 0; j < row.size(); ++j) {
            Rat acc(0);
            for (size_t i = 0; i < row.size(); ++i) acc += Rat(row[i]) * matrix[i][j];
            if (acc.denominator() != 1) return false;
        }
    }
    return true;
}

IntVec VirtualEndo::apply(const IntVec& v) const {
    if (!domain.contains(v)) throw InputError("vector outside the virtual endomorphism domain");
    IntVec out(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
        Rat acc(0);
        for (size_t i = 0; i < v.size(); ++i) acc += Rat(v[i]) * matrix[i][j];
        if (acc.denominator() != 1) throw InputError("virtual endomorphism is not integral here");
        out[j] = acc.numerator();
    }
    return out;
}

namespace {

// scale a rational matrix to integers; returns (scaled, denominator)
std::pair<IntMatrix, Int> scale_matrix(const RatMatrix& m) {
    Int d = 1;
    for (const auto& row : m)
        for (const auto& x : row) d = lcm(d, x.denominator());
    IntMatrix out(m.size(), IntVec(m.empty() ? 0 : m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            out[i][j] = m[i][j].numerator() * (d / m[i][j].denominator());
    return {out, d};
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    const size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, IntVec(c, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    return out;
}

} // namespace

Lattice VirtualEndo::image_of(const Lattice& l) const {
    if (!domain.contains(l)) throw InputError("image of a lattice outside the domain");
    auto [scaled, d] = scale_matrix(matrix);
    IntMatrix prod = mul(l.basis(), scaled);
    for (auto& row : prod)
        for (auto& x : row) {
            if (x % d != 0) throw InputError("virtual endomorphism is not integral on the lattice");
            x /= d;
        }
    return Lattice::from_rows(dim(), std::move(prod));
}

Lattice VirtualEndo::kernel_lattice() const {
    auto [scaled, d] = scale_matrix(matrix);
    IntMatrix a = mul(domain.basis(), scaled);
    IntMatrix coeff = int_kernel(a);
    IntMatrix rows = mul(coeff, domain.basis());
    return Lattice::from_rows(dim(), std::move(rows));
}

Lattice VirtualEndo::preimage(const Lattice& k) const {
    auto [scaled, d] = scale_matrix(matrix);
    IntMatrix a = mul(domain.basis(), scaled); // c * a must land in d*k
    Lattice dk = k.scaled(d);
    const size_t rows_a = a.size(), rows_k = dk.basis().size();
    IntMatrix stacked;
    stacked.reserve(rows_a + rows_k);
    for (const auto& row : a) stacked.push_back(row);
    for (const auto& row : dk.basis()) stacked.push_back(row);
    IntMatrix kernel = int_kernel(stacked);
    IntMatrix out;
    for (const auto& krow : kernel) {
        IntVec c(rows_a);
        for (size_t i = 0; i < rows_a; ++i) c[i] = krow[i];
        IntVec v(static_cast<size_t>(dim()), 0);
        for (size_t i = 0; i < rows_a; ++i)
            for (size_t j = 0; j < v.size(); ++j) v[j] += c[i] * domain.basis()[i][j];
        out.push_back(std::move(v));
    }
    return Lattice::from_rows(dim(), std::move(out));
}

IntVec int_vec(const std::vector<long long>& v) {
    IntVec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(x);
    return out;
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

} // namespace selfsim
