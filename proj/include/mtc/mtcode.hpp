#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mtc/lincode.hpp"
#include "mtc/pmat.hpp"

namespace mtc {

/// Block lengths m_i and nonzero shift constants lambda_i of a multi-twisted code.
class MTProfile {
  public:
    /// Throws DomainError on empty or mismatched lists, a zero block or a zero shift.
    MTProfile(Field field, std::vector<std::size_t> blocks, std::vector<Elem> shifts);

    const Field& field() const { return field_; }
    std::size_t ell() const { return blocks_.size(); }
    const std::vector<std::size_t>& blocks() const { return blocks_; }
    const std::vector<Elem>& shifts() const { return shifts_; }
    /// t_i = multiplicative order of lambda_i.
    const std::vector<std::uint64_t>& orders() const { return orders_; }
    /// lcm(t_i m_i)
    std::uint64_t N() const { return N_; }
    std::size_t length() const { return length_; }
    Moduli moduli() const;

    /// Shifts lambda_i^{-1}.
    MTProfile inverse() const;
    /// Shifts sigma^k(lambda_i).
    MTProfile frobenius(unsigned k) const;
    /// Blocks (m_l, ..., m_1) and shifts (lambda_l^{-1}, ..., lambda_1^{-1}).
    MTProfile reversed() const;

    /// x^N - 1
    Poly xn_minus_one() const;
    /// diag((x^N - 1)/(x^{m_i} - lambda_i))
    PolyMatrix cofactor_diagonal() const;

    friend bool operator==(const MTProfile& a, const MTProfile& b) {
        return a.field_ == b.field_ && a.blocks_ == b.blocks_ && a.shifts_ == b.shifts_;
    }

  private:
    Field field_;
    std::vector<std::size_t> blocks_;
    std::vector<Elem> shifts_;
    std::vector<std::uint64_t> orders_;
    std::uint64_t N_ = 1;
    std::size_t length_ = 0;
};

/// Scalar vector of length n <-> one polynomial per block (low degree first).
std::vector<Poly> to_poly_vector(const MTProfile& profile, const Vec& v);
Vec to_scalar_vector(const MTProfile& profile, const std::vector<Poly>& polys);

struct DualPair {
    PolyMatrix H;  // GPM of the Euclidean dual
    PolyMatrix B;  // B H = diag(x^{m_i} - lambda_i^{-1})
    MTProfile profile;
};

/// An MT code held by its reduced (Hermite) GPM G and companion A with
/// A G = diag(x^{m_i} - lambda_i).
class MTCode {
  public:
    /// `gpm` must already contain the diagonal submodule in its row module.
    static MTCode from_gpm(const MTProfile& profile, const PolyMatrix& gpm);
    /// Row module of `rows` plus the diagonal submodule.
    static MTCode from_generators(const MTProfile& profile, const PolyMatrix& rows);
    static MTCode zero(const MTProfile& profile);
    static MTCode full(const MTProfile& profile);

    const MTProfile& profile() const { return profile_; }
    const PolyMatrix& gpm() const { return G_; }
    const PolyMatrix& companion() const { return A_; }
    /// deg det A
    std::size_t dimension() const { return dim_; }
    /// Euclidean dual GPM and its companion, computed once on first use.
    const DualPair& dual() const;

    friend bool operator==(const MTCode& a, const MTCode& b) { return a.profile_ == b.profile_ && a.G_ == b.G_; }

  private:
    struct Cache;
    MTCode(MTProfile profile, PolyMatrix g, PolyMatrix a, std::size_t dim);

    MTProfile profile_;
    PolyMatrix G_;
    PolyMatrix A_;
    std::size_t dim_;
    std::shared_ptr<Cache> cache_;
};

/// Throws DomainError when C is not T_Lambda invariant or lengths differ.
MTCode mt_from_linear(const LinearCode& c, const MTProfile& profile);
LinearCode mt_to_linear(const MTCode& m);

/// M(1/x) diag(x^{m_j}) after reducing column j modulo x^{m_j} - lambda_j.
PolyMatrix reciprocal_transform(const PolyMatrix& m, const MTProfile& profile);

DualPair dual_gpm(const MTCode& m);
/// (sigma^{e-kappa}(H), sigma^{e-kappa}(B)) with shifts sigma^{e-kappa}(Lambda^{-1}).
DualPair galois_dual_gpm(const MTCode& m, unsigned kappa);
MTCode galois_dual_code(const MTCode& m, unsigned kappa);
/// Reversed code: GPM hnf(B^T J_l) over the reversed profile.
MTCode reversed_gpm(const MTCode& m);
/// Block-wise coordinate reversal: GPM hnf(B^T) with shifts Lambda^{-1}.
MTCode lmap_gpm(const MTCode& m);

struct IntersectionResult {
    MTCode code;
    PolyMatrix T;  // generator of the auxiliary QC code, reduced mod x^N - 1
    PolyMatrix Q;  // its reduced GPM (moduli x^N - 1)
    PolyMatrix P;  // P Q = (x^N - 1) I
};

/// C1 ∩ C2 for identical profiles.
IntersectionResult intersect_gpm(const MTCode& m1, const MTCode& m2);
/// C1^{⊥κ} ∩ C2; needs sigma^{e-kappa}(Lambda1^{-1}) = Lambda2 and equal blocks.
IntersectionResult galois_intersect_gpm(const MTCode& m1, const MTCode& m2, unsigned kappa);
/// C1 ⊆ C2 for identical profiles.
bool contains(const MTCode& m1, const MTCode& m2);

struct FactorContribution {
    Poly p;
    int multiplicity = 1;
    ChainType type;   // r = {rank} when multiplicity is 1
    long long weight = 0;  // deg(p) * sum (f - h) r_h
};

struct TrivialIntersectionReport {
    bool trivial = false;
    PolyMatrix matrix;  // A1^T diag(...) G2^T mod x^N - 1
    std::vector<FactorContribution> factors;
    long long weighted_sum = 0;
    std::size_t target = 0;  // dim C2
    std::uint64_t seed = 0;
};

TrivialIntersectionReport trivial_intersection_mt(const MTCode& m1, const MTCode& m2);

enum class Property { self_orthogonal, dual_containing, lcd, reversible };
enum class Verdict { holds, fails, precondition_unmet };

std::string to_string(Property p);
std::string to_string(Verdict v);

struct PropertyReport {
    Property property = Property::self_orthogonal;
    unsigned kappa = 0;
    Verdict verdict = Verdict::fails;
    std::string reason;                 // set when the precondition is unmet
    std::optional<PolyMatrix> residue;  // congruence residue mod x^N - 1
    std::vector<FactorContribution> factors;  // lcd rank table
    long long weighted_sum = 0;
    std::size_t dimension = 0;
    std::uint64_t seed = 0;
};

/// kappa is ignored for `reversible`. Throws DomainError for kappa >= e.
PropertyReport property_check(const MTCode& m, Property which, unsigned kappa = 0);

/// Minimum distance with an explicit unknown state (over budget).
struct DistanceInfo {
    enum class Kind { finite, infinite, unknown } kind = Kind::unknown;
    std::size_t value = 0;
    std::string str() const;
};
DistanceInfo distance_info(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);

struct AdvisorReport {
    explicit AdvisorReport(LinearCode c) : intersection(std::move(c)) {}

    LinearCode intersection;
    DistanceInfo d1, d2, d_intersection;
    std::size_t ell = 0;
    std::size_t differing = 0;  // D(Lambda - Delta)
    bool lambda_admits = false;
    bool delta_admits = false;
    bool exhaustive = false;
    std::uint64_t candidates_tested = 0;
    std::vector<std::vector<Elem>> admitted;  // every tested Gamma that admits, code order
    std::vector<std::string> cases;           // case bookkeeping lines
    bool corollary_applies = false;           // d1 > l and d2 > l
    std::vector<std::size_t> differing_blocks;
    std::vector<bool> zero_projection;        // per differing block
};

/// Linear intersection of a Lambda-MT and a Delta-MT code with equal blocks,
/// and every shift vector Gamma under which it is invariant.
AdvisorReport intersection_structure_advisor(const LinearCode& c1, const MTProfile& p1, const LinearCode& c2,
                                             const MTProfile& p2, std::uint64_t gamma_budget = 4096,
                                             std::uint64_t distance_budget = kDefaultDistanceBudget);

}  // namespace mtc
