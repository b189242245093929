#include "mtc/pmat.hpp"

#include <algorithm>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Poly(field_)) {}

PolyMatrix::PolyMatrix(Field field, std::size_t cols, std::vector<std::vector<Poly>> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged polynomial matrix");
        for (auto& p : r) {
            if (!(p.field() == field_)) throw DomainError("matrix entry over a different field");
            data_.push_back(std::move(p));
        }
    }
}

PolyMatrix PolyMatrix::identity(const Field& f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(f, f.one());
    return m;
}

PolyMatrix PolyMatrix::diagonal(const Field& f, const std::vector<Poly>& d) {
    PolyMatrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

PolyMatrix PolyMatrix::moduli_diagonal(const Field& f, const Moduli& moduli) {
    std::vector<Poly> d;
    for (const auto& md : moduli) d.push_back(Poly::binomial(f, md.m, md.lambda));
    return diagonal(f, d);
}

PolyMatrix PolyMatrix::backward_identity(const Field& f, std::size_t n) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = Poly::constant(f, f.one());
    return m;
}

std::vector<Poly> PolyMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::scaled(const Poly& c) const {
    PolyMatrix r(*this);
    for (auto& p : r.data_) p = p * c;
    return r;
}

PolyMatrix PolyMatrix::frobenius(unsigned k) const {
    PolyMatrix r(*this);
    for (auto& p : r.data_) p = p.frobenius(k);
    return r;
}

PolyMatrix PolyMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DomainError("row block out of range");
    PolyMatrix r(field_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(first + i, j);
    return r;
}

PolyMatrix PolyMatrix::reduced(const Poly& m) const {
    PolyMatrix r(*this);
    for (auto& p : r.data_) p = p % m;
    return r;
}

PolyMatrix PolyMatrix::reduced_by_column(const Moduli& moduli) const {
    if (moduli.size() != cols_) throw DomainError("moduli count does not match column count");
    PolyMatrix r(*this);
    for (std::size_t j = 0; j < cols_; ++j) {
        const Poly md = Poly::binomial(field_, moduli[j].m, moduli[j].lambda);
        for (std::size_t i = 0; i < rows_; ++i) r(i, j) = r(i, j) % md;
    }
    return r;
}

PolyMatrix PolyMatrix::reciprocal_by_column(const std::vector<std::size_t>& blocks) const {
    if (blocks.size() != cols_) throw DomainError("block count does not match column count");
    PolyMatrix r(*this);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = reciprocal_poly(r(i, j), blocks[j]);
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch in addition");
    PolyMatrix r(a);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch in subtraction");
    PolyMatrix r(a);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in multiplication");
    if (!(a.field_ == b.field_)) throw DomainError("matrices over different fields");
    PolyMatrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.cols()) throw DomainError("column mismatch in vstack");
    PolyMatrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

std::string to_string(const PolyMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " | ";
            os << to_string(m(i, j));
        }
        os << '\n';
    }
    return os.str();
}

PolyMatrix parse_poly_matrix(const Field& f, const std::vector<std::string>& rows) {
    std::vector<std::vector<Poly>> out;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Poly> r;
        std::size_t start = 0;
        for (;;) {
            const std::size_t bar = rows[i].find('|', start);
            const std::string cell = rows[i].substr(start, bar == std::string::npos ? std::string::npos : bar - start);
            try {
                r.push_back(parse_poly(f, cell));
            } catch (const ParseError& e) {
                throw ParseError(e.message(), i + 1, start + e.column());
            }
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        if (i == 0) cols = r.size();
        if (r.size() != cols) throw ParseError("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols), i + 1, 1);
        out.push_back(std::move(r));
    }
    return PolyMatrix(f, cols, std::move(out));
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

using Rows = std::vector<std::vector<Poly>>;

Rows to_rows(const PolyMatrix& m) {
    Rows r;
    for (std::size_t i = 0; i < m.rows(); ++i) r.push_back(m.row(i));
    return r;
}

// row_i -= q * row_r
void axpy(std::vector<Poly>& dst, const Poly& q, const std::vector<Poly>& src) {
    for (std::size_t j = 0; j < dst.size(); ++j)
        if (!src[j].is_zero()) dst[j] -= q * src[j];
}

void scale_row(std::vector<Poly>& row, Elem c) {
    for (auto& p : row) p = p.scaled(c);
}

}  // namespace

HnfResult hnf(const PolyMatrix& m) {
    const Field& F = m.field();
    const std::size_t R = m.rows(), C = m.cols();
    Rows H = to_rows(m);
    Rows U = to_rows(PolyMatrix::identity(F, R));
    std::vector<std::size_t> pivots;

    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        bool found = false;
        for (;;) {
            std::size_t best = R;
            for (std::size_t i = r; i < R; ++i)
                if (!H[i][c].is_zero() && (best == R || H[i][c].degree() < H[best][c].degree())) best = i;
            if (best == R) break;
            found = true;
            std::swap(H[r], H[best]);
            std::swap(U[r], U[best]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (H[i][c].is_zero()) continue;
                const Poly q = divmod(H[i][c], H[r][c]).quotient;
                axpy(H[i], q, H[r]);
                axpy(U[i], q, U[r]);
                if (!H[i][c].is_zero()) cleared = false;
            }
            if (cleared) break;
        }
        if (!found) continue;
        const Elem inv = F.inv(H[r][c].leading());
        scale_row(H[r], inv);
        scale_row(U[r], inv);
        for (std::size_t i = 0; i < r; ++i) {
            const Poly q = divmod(H[i][c], H[r][c]).quotient;
            if (q.is_zero()) continue;
            axpy(H[i], q, H[r]);
            axpy(U[i], q, U[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    return {PolyMatrix(F, C, std::move(H)), PolyMatrix(F, R, std::move(U)), std::move(pivots)};
}

PolyMatrix reduce_to_gpm(const PolyMatrix& rows, const Moduli& moduli) {
    const std::size_t l = moduli.size();
    if (rows.cols() != l) throw DomainError("generator rows have " + std::to_string(rows.cols()) + " columns, expected " + std::to_string(l));
    HnfResult h = hnf(rows);
    if (h.pivots.size() != l)
        throw DomainError("rows do not generate a module of full rank " + std::to_string(l));
    PolyMatrix g = h.H.row_block(0, l);
    // The diagonal submodule must lie in the row module.
    (void)solve_identical(g, moduli);
    return g;
}

PolyMatrix solve_identical(const PolyMatrix& gpm, const Moduli& moduli) {
    const Field& F = gpm.field();
    const std::size_t l = moduli.size();
    if (gpm.rows() != l || gpm.cols() != l) throw DomainError("GPM must be square of size ell");
    HnfResult h = hnf(gpm);
    if (h.pivots.size() != l) throw DomainError("GPM is singular");
    // Pivots of a nonsingular square HNF sit on the diagonal.
    PolyMatrix A(F, l, l);
    for (std::size_t i = 0; i < l; ++i) {
        // Solve b * H = (x^{m_i} - lambda_i) e_i by forward substitution.
        std::vector<Poly> target(l, Poly(F));
        target[i] = Poly::binomial(F, moduli[i].m, moduli[i].lambda);
        std::vector<Poly> b(l, Poly(F));
        for (std::size_t j = 0; j < l; ++j) {
            Poly rhs = target[j];
            for (std::size_t k = 0; k < j; ++k)
                if (!b[k].is_zero() && !h.H(k, j).is_zero()) rhs -= b[k] * h.H(k, j);
            auto [q, rem] = divmod(rhs, h.H(j, j));
            if (!rem.is_zero())
                throw DomainError("x^" + std::to_string(moduli[i].m) + " - lambda row " + std::to_string(i + 1) + " is not in the row module of the GPM");
            b[j] = std::move(q);
        }
        for (std::size_t j = 0; j < l; ++j) {
            Poly acc(F);
            for (std::size_t k = 0; k < l; ++k)
                if (!b[k].is_zero() && !h.U(k, j).is_zero()) acc += b[k] * h.U(k, j);
            A(i, j) = std::move(acc);
        }
    }
    return A;
}

Degree deg_det(const PolyMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    if (m.rows() == 0) return Degree(0);
    HnfResult h = hnf(m);
    if (h.pivots.size() != m.rows()) return Degree::minus_infinity();
    Degree d(0);
    for (std::size_t i = 0; i < m.rows(); ++i) d = d + h.H(i, i).degree();
    return d;
}

Poly determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    const Field& F = m.field();
    const std::size_t n = m.rows();
    Rows a = to_rows(m);
    Poly prev = Poly::constant(F, F.one());
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a[s][k].is_zero()) ++s;
            if (s == n) return Poly(F);
            std::swap(a[k], a[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = Poly(F);
        }
        prev = a[k][k];
    }
    Poly d = n == 0 ? Poly::constant(F, F.one()) : a[n - 1][n - 1];
    return negate ? -d : d;
}

// ---------------------------------------------------------------------------
// Residue field and chain ring

std::size_t rank_mod(const PolyMatrix& m, const Poly& p) {
    if (!is_irreducible(p)) throw DomainError("rank_mod requires an irreducible modulus");
    Rows a = to_rows(m.reduced(p));
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t piv = rank;
        while (piv < R && a[piv][c].is_zero()) ++piv;
        if (piv == R) continue;
        std::swap(a[rank], a[piv]);
        const Poly inv = inverse_mod(a[rank][c], p);
        for (std::size_t i = rank + 1; i < R; ++i) {
            if (a[i][c].is_zero()) continue;
            const Poly q = (a[i][c] * inv) % p;
            for (std::size_t j = c; j < C; ++j) a[i][j] = (a[i][j] - q * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

long long ChainType::log_size() const {
    long long s = 0;
    for (int h = 0; h < static_cast<int>(r.size()); ++h) s += static_cast<long long>(f - h) * r[static_cast<std::size_t>(h)];
    return s * p.degree().value();
}

ChainType chain_type(const PolyMatrix& m, const Poly& p, int f) {
    if (f < 1) throw DomainError("chain_type requires f >= 1");
    if (!is_irreducible(p)) throw DomainError("chain_type requires an irreducible p");
    const Field& F = m.field();
    const Poly pm = p.monic();
    Poly pf = Poly::constant(F, F.one());
    for (int i = 0; i < f; ++i) pf = pf * pm;

    // Valuation of a nonzero residue and its cofactor a = p^v * u.
    auto split = [&](const Poly& a) {
        int v = 0;
        Poly u = a;
        while (v < f) {
            auto [q, r] = divmod(u, pm);
            if (!r.is_zero()) break;
            u = std::move(q);
            ++v;
        }
        return std::pair<int, Poly>(v, u);
    };

    Rows a = to_rows(m.reduced(pf));
    std::vector<bool> row_live(m.rows(), true), col_live(m.cols(), true);
    ChainType out{pm, f, std::vector<int>(static_cast<std::size_t>(f), 0)};

    // Smallest-valuation pivoting with row operations and column permutations
    // brings the matrix to the block-triangular p-power standard form.
    for (;;) {
        int best_v = f;
        std::size_t br = 0, bc = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!row_live[i]) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!col_live[j] || a[i][j].is_zero()) continue;
                const int v = split(a[i][j]).first;
                if (v < best_v) {
                    best_v = v;
                    br = i;
                    bc = j;
                }
            }
        }
        if (best_v >= f) break;
        ++out.r[static_cast<std::size_t>(best_v)];
        const Poly unit_inv = inverse_mod(split(a[br][bc]).second, pf);
        Poly pv = Poly::constant(F, F.one());
        for (int k = 0; k < best_v; ++k) pv = pv * pm;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!row_live[i] || i == br || a[i][bc].is_zero()) continue;
            // Every live entry has valuation >= best_v, so p^best_v divides it.
            const Poly q = (exact_div(a[i][bc], pv) * unit_inv) % pf;
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!a[br][j].is_zero()) a[i][j] = (a[i][j] - q * a[br][j]) % pf;
        }
        row_live[br] = false;
        col_live[bc] = false;
    }
    return out;
}

}  // namespace mtc
