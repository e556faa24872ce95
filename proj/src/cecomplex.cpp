#include "supercohom/cecomplex.hpp"

#include <cstdlib>
#include <sstream>

namespace supercohom {

Limits limits_from_env(Limits base)
{
    if (const char* env = std::getenv("SUPERCOHOM_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw InputError("SUPERCOHOM_CAP must be a positive integer");
        base.max_cochain_dim = static_cast<std::size_t>(v);
    }
    return base;
}

// ---------------------------------------------------------------------------
// Modules

CoefficientModule::CoefficientModule(std::string name, std::vector<BasisElement> basis,
                                     std::vector<std::vector<SparseVector>> action)
    : name_(std::move(name)), basis_(std::move(basis)), action_(std::move(action))
{
    for (const auto& per_x : action_) {
        if (per_x.size() != basis_.size())
            throw InputError("module action has wrong number of columns");
        for (const auto& v : per_x)
            if (!v.empty() && v.rbegin()->first >= basis_.size())
                throw InputError("module action index out of range");
    }
}

std::vector<Parity> CoefficientModule::parities() const
{
    std::vector<Parity> out;
    for (const auto& b : basis_)
        out.push_back(b.parity);
    return out;
}

std::vector<std::string> CoefficientModule::names() const
{
    std::vector<std::string> out;
    for (const auto& b : basis_)
        out.push_back(b.name);
    return out;
}

CoefficientModule adjoint_module(const LieSuperalgebra& alg)
{
    std::vector<std::vector<SparseVector>> action(alg.dim());
    for (std::size_t x = 0; x < alg.dim(); ++x)
        for (std::size_t m = 0; m < alg.dim(); ++m)
            action[x].push_back(alg.bracket(x, m));
    return CoefficientModule("adjoint", alg.basis(), std::move(action));
}

CoefficientModule trivial_module(const LieSuperalgebra& alg)
{
    std::vector<std::vector<SparseVector>> action(alg.dim(), std::vector<SparseVector>(1));
    return CoefficientModule("trivial", {{"1", Parity::Even}}, std::move(action));
}

CoefficientModule pullback_adjoint(const LieSuperalgebra& alg, const QuotientAlgebra& q)
{
    std::vector<std::vector<SparseVector>> action;
    for (std::size_t x : q.lift) {
        std::vector<SparseVector> cols;
        for (std::size_t m = 0; m < alg.dim(); ++m)
            cols.push_back(alg.bracket(x, m));
        action.push_back(std::move(cols));
    }
    return CoefficientModule("adjoint", alg.basis(), std::move(action));
}

std::vector<ModuleViolation> module_violations(const LieSuperalgebra& alg, const CoefficientModule& module)
{
    if (module.algebra_dim() != alg.dim())
        throw InputError("module is defined for an algebra of a different dimension");
    std::vector<ModuleViolation> out;
    auto act = [&](std::size_t x, const SparseVector& v) {
        SparseVector r;
        for (const auto& [m, c] : v)
            axpy(r, c, module.act(x, m));
        return r;
    };
    for (std::size_t x = 0; x < alg.dim(); ++x)
        for (std::size_t m = 0; m < module.dim(); ++m) {
            const Parity expected = alg.parity(x) + module.parity(m);
            SparseVector stray;
            for (const auto& [i, c] : module.act(x, m))
                if (module.parity(i) != expected)
                    stray.emplace(i, c);
            if (!stray.empty())
                out.push_back({"parity", x, x, m, stray});
        }
    for (std::size_t x = 0; x < alg.dim(); ++x)
        for (std::size_t y = 0; y < alg.dim(); ++y)
            for (std::size_t m = 0; m < module.dim(); ++m) {
                SparseVector r = act(x, module.act(y, m));
                axpy(r, -koszul(alg.parity(x), alg.parity(y)), act(y, module.act(x, m)));
                for (const auto& [i, c] : alg.bracket(x, y))
                    axpy(r, -c, module.act(i, m));
                if (!r.empty())
                    out.push_back({"axiom", x, y, m, r});
            }
    return out;
}

// ---------------------------------------------------------------------------
// Cochains

Cochain Cochain::term(std::size_t m, const Monomial& w, const Scalar& c)
{
    Cochain out(static_cast<int>(w.degree()));
    out.add(m, w, c);
    return out;
}

void Cochain::add(std::size_t m, const Monomial& w, const Scalar& c)
{
    if (static_cast<int>(w.degree()) != degree_)
        throw InputError("cochain term of degree " + std::to_string(w.degree()) + " added to a degree " +
                         std::to_string(degree_) + " cochain");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(Key{m, w}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Cochain::add(const Cochain& other, const Scalar& c)
{
    if (other.is_zero() || c == 0)
        return;
    if (other.degree_ != degree_)
        throw InputError("adding cochains of different degrees");
    for (const auto& [key, v] : other.terms_)
        add(key.first, key.second, c * v);
}

std::optional<Parity> Cochain::parity(const std::vector<Parity>& module_parities, const GeneratorSet& gens) const
{
    std::optional<Parity> out;
    for (const auto& [key, v] : terms_) {
        const Parity p = module_parities.at(key.first) + key.second.parity(gens);
        if (out && *out != p)
            return std::nullopt;
        out = p;
    }
    return out;
}

std::string format_cochain(const std::vector<std::string>& module_names,
                           const std::vector<std::string>& generator_names, const Cochain& c)
{
    if (c.is_zero())
        return "0";
    std::string out;
    for (const auto& [key, v] : c.terms()) {
        if (!out.empty())
            out += ' ';
        out += (v > 0 ? "+" : "") + to_string(v) + "*" + module_names.at(key.first) + "|" +
               format_monomial(generator_names, key.second);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Differential

ExteriorElement dual_generator_differential(const LieSuperalgebra& alg, std::size_t i)
{
    const auto gens = alg.parities();
    const std::size_t n = alg.dim();
    ExteriorElement out;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            auto it = alg.bracket(k, l).find(i);
            if (it == alg.bracket(k, l).end())
                continue;
            const Scalar& a = it->second;
            if (k < l) {
                Monomial m = Monomial(n).with_exponent(k, 1).with_exponent(l, 1);
                add_term(out, m, -koszul(alg.parity(k), alg.parity(l)) * a);
            } else if (is_odd(gens[k])) {
                add_term(out, Monomial(n).with_exponent(k, 2), a / 2);
            }
        }
    return out;
}

namespace {

std::vector<ExteriorElement> all_dual_differentials(const LieSuperalgebra& alg)
{
    std::vector<ExteriorElement> out;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        out.push_back(dual_generator_differential(alg, i));
    return out;
}

} // namespace

CochainComplex::CochainComplex(LieSuperalgebra alg, CoefficientModule module, Limits limits)
    : CochainComplex(alg, std::move(module), all_dual_differentials(alg), limits)
{
}

CochainComplex::CochainComplex(LieSuperalgebra alg, CoefficientModule module,
                               std::vector<ExteriorElement> dual_differentials, Limits limits)
    : alg_(std::move(alg)), module_(std::move(module)), gens_(alg_.parities()), limits_(limits),
      dual_d_(std::move(dual_differentials))
{
    if (module_.algebra_dim() != alg_.dim())
        throw InputError("module is defined for an algebra of a different dimension");
    if (dual_d_.size() != alg_.dim())
        throw InputError("one dual differential per generator is required");
}

Cochain CochainComplex::d_module_element(std::size_t m) const
{
    Cochain out(1);
    for (std::size_t i = 0; i < alg_.dim(); ++i) {
        const int sign = koszul(alg_.parity(i), module_.parity(m));
        const Monomial xi = Monomial::generator(alg_.dim(), i);
        for (const auto& [n, c] : module_.act(i, m))
            out.add(n, xi, sign * c);
    }
    return out;
}

ExteriorElement CochainComplex::d(const Monomial& w) const
{
    ExteriorElement out;
    const auto word = w.word();
    const std::size_t n = alg_.dim();
    for (std::size_t j = 0; j < word.size(); ++j) {
        std::vector<std::uint8_t> left(n, 0), right(n, 0);
        for (std::size_t l = 0; l < j; ++l)
            ++left[word[l]];
        for (std::size_t l = j + 1; l < word.size(); ++l)
            ++right[word[l]];
        ExteriorElement lhs{{Monomial(left), Scalar((j % 2) ? -1 : 1)}};
        ExteriorElement rhs{{Monomial(right), Scalar(1)}};
        add_scaled(out, 1, wedge(gens_, wedge(gens_, lhs, dual_d_.at(word[j])), rhs));
    }
    return out;
}

ExteriorElement CochainComplex::d(const ExteriorElement& w) const
{
    ExteriorElement out;
    for (const auto& [m, c] : w)
        add_scaled(out, c, d(m));
    return out;
}

Cochain CochainComplex::d(const Cochain& c) const
{
    Cochain out(c.degree() + 1);
    for (const auto& [key, coeff] : c.terms()) {
        const auto& [m, w] = key;
        const Cochain dm = d_module_element(m);
        for (const auto& [dm_key, dm_c] : dm.terms())
            if (auto t = wedge(gens_, dm_key.second, w))
                out.add(dm_key.first, t->monomial, coeff * dm_c * t->coefficient);
        for (const auto& [mono, v] : d(w))
            out.add(m, mono, coeff * v);
    }
    return out;
}

std::size_t CochainComplex::dim(int k) const
{
    if (k < 0)
        return 0;
    const auto [r, s] = alg_.superdim();
    const auto count = static_cast<std::size_t>(exterior_dim(static_cast<std::int64_t>(r),
                                                             static_cast<std::int64_t>(s), k));
    const std::size_t total = count * module_.dim();
    if (total > limits_.max_cochain_dim)
        throw ResourceCapError("cochain space C^" + std::to_string(k) + " of " + alg_.name() + " has dimension " +
                               std::to_string(total) + " > cap " + std::to_string(limits_.max_cochain_dim));
    return total;
}

const CochainComplex::DegreeBasis& CochainComplex::degree_basis(int k) const
{
    dim(k); // cap check before enumerating
    std::lock_guard lock(mutex_);
    auto it = bases_.find(k);
    if (it != bases_.end())
        return *it->second;
    auto basis = std::make_shared<DegreeBasis>();
    basis->monomials = enumerate_basis(gens_, k);
    for (std::size_t j = 0; j < basis->monomials.size(); ++j)
        basis->index.emplace(basis->monomials[j], j);
    return *bases_.emplace(k, std::move(basis)).first->second;
}

const std::vector<Monomial>& CochainComplex::monomials(int k) const { return degree_basis(k).monomials; }

std::size_t CochainComplex::index_of(int k, std::size_t m, const Monomial& w) const
{
    const auto& b = degree_basis(k);
    auto it = b.index.find(w);
    if (it == b.index.end() || m >= module_.dim())
        throw InputError("cochain term outside C^" + std::to_string(k));
    return m * b.monomials.size() + it->second;
}

Cochain::Key CochainComplex::key_of(int k, std::size_t index) const
{
    const auto& b = degree_basis(k);
    return {index / b.monomials.size(), b.monomials.at(index % b.monomials.size())};
}

Parity CochainComplex::basis_parity(int k, std::size_t index) const
{
    const auto key = key_of(k, index);
    return module_.parity(key.first) + key.second.parity(gens_);
}

SparseVector CochainComplex::to_vector(const Cochain& c) const
{
    SparseVector v;
    for (const auto& [key, coeff] : c.terms())
        v.emplace(index_of(c.degree(), key.first, key.second), coeff);
    return v;
}

Cochain CochainComplex::from_vector(int k, const SparseVector& v) const
{
    Cochain c(k);
    for (const auto& [i, coeff] : v) {
        auto key = key_of(k, i);
        c.add(key.first, key.second, coeff);
    }
    return c;
}

const SparseMatrix& CochainComplex::differential(int k) const
{
    {
        std::lock_guard lock(mutex_);
        auto it = matrices_.find(k);
        if (it != matrices_.end())
            return *it->second;
    }
    auto m = std::make_shared<SparseMatrix>(dim(k + 1), dim(k));
    if (k >= 0) {
        const auto& mons = monomials(k);
        std::vector<ExteriorElement> dw;
        dw.reserve(mons.size());
        for (const auto& w : mons)
            dw.push_back(d(w));
        std::vector<Cochain> dm;
        for (std::size_t a = 0; a < module_.dim(); ++a)
            dm.push_back(d_module_element(a));
        for (std::size_t a = 0; a < module_.dim(); ++a)
            for (std::size_t j = 0; j < mons.size(); ++j) {
                Cochain out(k + 1);
                for (const auto& [dm_key, dm_c] : dm[a].terms())
                    if (auto t = wedge(gens_, dm_key.second, mons[j]))
                        out.add(dm_key.first, t->monomial, dm_c * t->coefficient);
                for (const auto& [mono, v] : dw[j])
                    out.add(a, mono, v);
                m->set_column(a * mons.size() + j, to_vector(out));
            }
    }
    std::lock_guard lock(mutex_);
    return *matrices_.emplace(k, std::move(m)).first->second;
}

std::string to_matrix_market(const SparseMatrix& m)
{
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate rational general\n";
    os << "% entries are exact rationals written p or p/q\n";
    os << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c))
            os << (r + 1) << ' ' << (c + 1) << ' ' << to_string(v) << '\n';
    return os.str();
}

} // namespace supercohom
