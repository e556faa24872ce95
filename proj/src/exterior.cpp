#include "supercohom/exterior.hpp"

#include <algorithm>
#include <numeric>

namespace supercohom {

Monomial::Monomial(std::vector<std::uint8_t> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::size_t{0}))
{
}

Monomial Monomial::generator(std::size_t generators, std::size_t i)
{
    Monomial m(generators);
    return m.with_exponent(i, 1);
}

Parity Monomial::parity(const GeneratorSet& gens) const
{
    unsigned odd = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (is_odd(gens.at(i)))
            odd += exps_[i];
    return (odd % 2) ? Parity::Odd : Parity::Even;
}

std::vector<std::size_t> Monomial::word() const
{
    std::vector<std::size_t> w;
    w.reserve(degree_);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        for (unsigned e = 0; e < exps_[i]; ++e)
            w.push_back(i);
    return w;
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e) const
{
    Monomial m = *this;
    m.degree_ = m.degree_ - m.exps_.at(i) + e;
    m.exps_[i] = static_cast<std::uint8_t>(e);
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (a.degree_ != b.degree_)
        return a.degree_ <=> b.degree_;
    // Larger exponent vector first.
    return b.exps_ <=> a.exps_;
}

void add_term(ExteriorElement& e, const Monomial& m, const Scalar& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = e.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            e.erase(it);
    }
}

void add_scaled(ExteriorElement& e, const Scalar& c, const ExteriorElement& other)
{
    for (const auto& [m, v] : other)
        add_term(e, m, c * v);
}

std::optional<SignedTerm> normal_order(const GeneratorSet& gens, std::span<const std::size_t> word)
{
    int sign = 1;
    for (std::size_t a = 0; a < word.size(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b) {
            if (word[a] == word[b] && !is_odd(gens.at(word[a])))
                return std::nullopt;
            if (word[a] > word[b])
                sign *= -koszul(gens.at(word[a]), gens.at(word[b]));
        }
    std::vector<std::uint8_t> exps(gens.size(), 0);
    for (std::size_t g : word)
        ++exps.at(g);
    return SignedTerm{Scalar(sign), Monomial(std::move(exps))};
}

std::optional<SignedTerm> wedge(const GeneratorSet& gens, const Monomial& a, const Monomial& b)
{
    // Both words are sorted, so the inversions of the concatenation are the
    // pairs (generator i of a, generator j of b) with i > j.
    int sign = 1;
    std::vector<std::uint8_t> exps(gens.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const unsigned ea = a.exponent(i);
        const unsigned eb = b.exponent(i);
        if (ea && eb && !is_odd(gens[i]))
            return std::nullopt;
        exps[i] = static_cast<std::uint8_t>(ea + eb);
        if (!ea)
            continue;
        for (std::size_t j = 0; j < i; ++j) {
            const unsigned ej = b.exponent(j);
            if (ej && ((ea * ej) % 2) && koszul(gens[i], gens[j]) == 1)
                sign = -sign;
        }
    }
    return SignedTerm{Scalar(sign), Monomial(std::move(exps))};
}

ExteriorElement wedge(const GeneratorSet& gens, const ExteriorElement& a, const ExteriorElement& b)
{
    ExteriorElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            if (auto t = wedge(gens, ma, mb))
                add_term(out, t->monomial, ca * cb * t->coefficient);
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k == 0)
        return 1;
    if (k < 0 || n < 0 || n < k)
        return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

std::int64_t exterior_dim(std::int64_t r, std::int64_t s, std::int64_t k)
{
    if (k < 0)
        return 0;
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= k; ++i)
        total += binomial(r, k - i) * binomial(s + i - 1, i);
    return total;
}

namespace {

void enumerate_rec(const GeneratorSet& gens, std::size_t pos, int remaining, std::vector<std::uint8_t>& exps,
                   std::vector<Monomial>& out)
{
    if (pos == gens.size()) {
        if (remaining == 0)
            out.emplace_back(exps);
        return;
    }
    const int cap = is_odd(gens[pos]) ? remaining : std::min(remaining, 1);
    for (int e = cap; e >= 0; --e) {
        exps[pos] = static_cast<std::uint8_t>(e);
        enumerate_rec(gens, pos + 1, remaining - e, exps, out);
    }
    exps[pos] = 0;
}

} // namespace

std::vector<Monomial> enumerate_basis(const GeneratorSet& gens, int k)
{
    std::vector<Monomial> out;
    if (k < 0)
        return out;
    std::vector<std::uint8_t> exps(gens.size(), 0);
    enumerate_rec(gens, 0, k, exps, out);
    return out;
}

Scalar evaluate(const GeneratorSet& gens, const Monomial& mono, std::span<const std::size_t> tuple)
{
    if (tuple.size() != mono.degree())
        throw InputError("evaluate: tuple length " + std::to_string(tuple.size()) +
                         " does not match monomial degree " + std::to_string(mono.degree()));
    if (tuple.empty())
        return 1;
    std::size_t u = 0;
    while (mono.exponent(u) == 0)
        ++u;
    const Monomial rest = mono.with_exponent(u, mono.exponent(u) - 1);
    const Parity rest_parity = rest.parity(gens);

    Scalar total = 0;
    std::vector<std::size_t> remaining;
    remaining.reserve(tuple.size() - 1);
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (tuple[j] != u)
            continue;
        const Parity pj = gens.at(tuple[j]);
        int sign = koszul(pj, rest_parity) * ((j % 2) ? -1 : 1);
        for (std::size_t l = 0; l < j; ++l)
            sign *= koszul(pj, gens.at(tuple[l]));
        remaining.clear();
        for (std::size_t l = 0; l < tuple.size(); ++l)
            if (l != j)
                remaining.push_back(tuple[l]);
        total += sign * evaluate(gens, rest, remaining);
    }
    return total;
}

Scalar evaluate(const GeneratorSet& gens, const ExteriorElement& e, std::span<const std::size_t> tuple)
{
    Scalar total = 0;
    for (const auto& [m, c] : e)
        total += c * evaluate(gens, m, tuple);
    return total;
}

ExteriorElement contract(const GeneratorSet& gens, std::size_t x, const Monomial& mono)
{
    ExteriorElement out;
    if (mono.degree() == 0)
        return out;
    std::size_t u = 0;
    while (mono.exponent(u) == 0)
        ++u;
    const Monomial rest = mono.with_exponent(u, mono.exponent(u) - 1);
    if (u == x)
        add_term(out, rest, koszul(gens.at(x), rest.parity(gens)));
    const ExteriorElement inner = contract(gens, x, rest);
    const Monomial head = Monomial::generator(gens.size(), u);
    for (const auto& [m, c] : inner)
        if (auto t = wedge(gens, head, m))
            add_term(out, t->monomial, -c * t->coefficient);
    return out;
}

ExteriorElement contract(const GeneratorSet& gens, std::size_t x, const ExteriorElement& e)
{
    ExteriorElement out;
    for (const auto& [m, c] : e)
        add_scaled(out, c, contract(gens, x, m));
    return out;
}

std::string format_monomial(const std::vector<std::string>& names, const Monomial& mono)
{
    if (mono.degree() == 0)
        return "1";
    std::string out;
    for (std::size_t i = 0; i < mono.generators(); ++i) {
        const unsigned e = mono.exponent(i);
        if (!e)
            continue;
        if (!out.empty())
            out += '^';
        out += names.at(i);
        if (e > 1)
            out += "~" + std::to_string(e);
    }
    return out;
}

} // namespace supercohom
