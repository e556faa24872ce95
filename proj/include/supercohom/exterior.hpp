#ifndef SUPERCOHOM_EXTERIOR_HPP
#define SUPERCOHOM_EXTERIOR_HPP

#include "supercohom/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace supercohom {

/// Parities of the dual generators x_0*, x_1*, ... in their fixed order.
using GeneratorSet = std::vector<Parity>;

/// Normal-ordered monomial of the super-exterior algebra: an exponent per
/// generator, at most 1 on even generators. The word it stands for lists
/// the generators in increasing index, odd ones repeated by exponent.
///
/// Ordering: by total degree, then lexicographically descending exponent
/// vectors. enumerate_basis() and std::map iteration agree with it.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t generators) : exps_(generators, 0) {}
    Monomial(std::vector<std::uint8_t> exps);

    static Monomial generator(std::size_t generators, std::size_t i);

    std::size_t generators() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint8_t>& exponents() const { return exps_; }
    std::size_t degree() const { return degree_; }
    Parity parity(const GeneratorSet& gens) const;

    /// Generator indices in normal order, with repetition.
    std::vector<std::size_t> word() const;

    Monomial with_exponent(std::size_t i, unsigned e) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint8_t> exps_;
    std::size_t degree_ = 0;
};

struct SignedTerm {
    Scalar coefficient;
    Monomial monomial;
};

/// Finite sum of monomials with nonzero coefficients.
using ExteriorElement = std::map<Monomial, Scalar>;

void add_term(ExteriorElement& e, const Monomial& m, const Scalar& c);
void add_scaled(ExteriorElement& e, const Scalar& c, const ExteriorElement& other);

/// Sorts a word of generator indices. Each transposition of distinct
/// generators u,v contributes -(-1)^{|u||v|}; a repeated even generator
/// gives nullopt (the zero element).
std::optional<SignedTerm> normal_order(const GeneratorSet& gens, std::span<const std::size_t> word);

std::optional<SignedTerm> wedge(const GeneratorSet& gens, const Monomial& a, const Monomial& b);
ExteriorElement wedge(const GeneratorSet& gens, const ExteriorElement& a, const ExteriorElement& b);

/// Binomial coefficient with C(n,0) = 1 for every n (including n = -1) and
/// C(n,k) = 0 when k < 0, when 0 <= n < k, or when n < 0 < k.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Dimension of the degree-k part on r even and s odd generators; 0 for k < 0.
std::int64_t exterior_dim(std::int64_t r, std::int64_t s, std::int64_t k);

/// All degree-k monomials in the Monomial ordering.
std::vector<Monomial> enumerate_basis(const GeneratorSet& gens, int k);

/// Value of a monomial on a tuple of basis vectors (given by index), fixed
/// by expanding the first generator u of mono = u ^ w:
///   mono(v_1..v_k) = sum_j s_j <u,v_j> w(v_1..^v_j..v_k),
///   s_j = (-1)^{|v_j||w|} (-1)^{j-1} prod_{l<j} (-1)^{|v_j||v_l|}.
/// Throws InputError on arity mismatch.
Scalar evaluate(const GeneratorSet& gens, const Monomial& mono, std::span<const std::size_t> tuple);
Scalar evaluate(const GeneratorSet& gens, const ExteriorElement& e, std::span<const std::size_t> tuple);

/// Interior product with basis vector x:
///   i_x(u ^ w) = (-1)^{|x||w|} <u,x> w - u ^ i_x(w),
/// so that evaluate(contract(x, w), t) = evaluate(w, (x, t...)).
ExteriorElement contract(const GeneratorSet& gens, std::size_t x, const Monomial& mono);
ExteriorElement contract(const GeneratorSet& gens, std::size_t x, const ExteriorElement& e);

/// Display syntax: generators joined by '^', odd exponents as '~n',
/// e.g. "x1^x2^y1~2"; the empty monomial prints as "1".
std::string format_monomial(const std::vector<std::string>& names, const Monomial& mono);

} // namespace supercohom

#endif
