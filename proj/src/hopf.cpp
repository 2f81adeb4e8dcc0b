#include <freeprob/hopf.hpp>

#include <algorithm>
#include <mutex>

namespace freeprob
{

namespace
{

void check_generator(const CoordRing& ring, const Word& w)
{
    if (w.empty() || static_cast<int>(w.size()) > ring.maxdeg) {
        throw ValidationError("generator " + to_string(w) + " is outside the truncation");
    }
    check_letters(w, ring.s);
}

void require_ring(const CoordRing& a, const CoordRing& b, const char* what)
{
    if (!(a == b)) {
        throw AlphabetMismatch(std::string(what) + ": coordinate rings differ");
    }
}

std::string rational_prefix(const Rational& c, bool first)
{
    std::string out;
    Rational mag = c;
    if (c < 0) {
        out = first ? "-" : " - ";
        mag = -c;
    } else if (!first) {
        out = " + ";
    }
    if (mag != 1) {
        out += to_string(mag) + "*";
    }
    return out;
}

} // namespace

Monomial Monomial::generator(const Word& w, int exponent)
{
    Monomial m;
    if (exponent != 0) {
        m.factors_.emplace_back(w, exponent);
    }
    return m;
}

int Monomial::exponent(const Word& w) const
{
    for (const auto& [u, e] : factors_) {
        if (u == w) {
            return e;
        }
    }
    return 0;
}

int Monomial::weighted_degree() const
{
    int d = 0;
    for (const auto& [w, e] : factors_) {
        d += e * (static_cast<int>(w.size()) - 1);
    }
    return d;
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& f : factors_) {
        d += f.second;
    }
    return d;
}

int Monomial::letter_length() const
{
    int d = 0;
    for (const auto& [w, e] : factors_) {
        d += e * static_cast<int>(w.size());
    }
    return d;
}

Monomial& Monomial::operator*=(const Monomial& other)
{
    if (other.factors_.empty()) {
        return *this;
    }
    std::vector<Factor> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            const int e = a->second + b->second;
            if (e != 0) {
                merged.emplace_back(a->first, e);
            }
            ++a;
            ++b;
        }
    }
    factors_ = std::move(merged);
    return *this;
}

CoordPoly::CoordPoly(CoordRing ring) : ring_(ring)
{
    if (ring.s < 1 || ring.maxdeg < 1) {
        throw ValidationError("coordinate ring needs s >= 1 and maxdeg >= 1");
    }
}

CoordPoly CoordPoly::constant(CoordRing ring, Rational c)
{
    CoordPoly p(ring);
    p.add_term(Monomial{}, c);
    return p;
}

CoordPoly CoordPoly::generator(CoordRing ring, const Word& w)
{
    check_generator(ring, w);
    if (ring.variant == Variant::reduced && w.size() == 1) {
        return constant(ring, Rational(1));
    }
    return monomial(ring, Monomial::generator(w));
}

CoordPoly CoordPoly::inverse_generator(CoordRing ring, int letter)
{
    const Word w{letter};
    check_generator(ring, w);
    if (ring.variant == Variant::reduced) {
        return constant(ring, Rational(1));
    }
    return monomial(ring, Monomial::generator(w, -1));
}

CoordPoly CoordPoly::monomial(CoordRing ring, Monomial m, Rational c)
{
    CoordPoly p(ring);
    p.add_term(m, c);
    return p;
}

Rational CoordPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

CoordPoly& CoordPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero()) {
        return *this;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
    return *this;
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& other)
{
    require_ring(ring_, other.ring_, "add");
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& other)
{
    require_ring(ring_, other.ring_, "subtract");
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

CoordPoly& CoordPoly::operator*=(const CoordPoly& other)
{
    require_ring(ring_, other.ring_, "multiply");
    CoordPoly out(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

CoordPoly& CoordPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.second *= c;
    }
    return *this;
}

CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
CoordPoly operator*(CoordPoly a, const CoordPoly& b) { return a *= b; }
CoordPoly operator*(const Rational& c, CoordPoly a) { return a *= c; }

CoordPoly pow(const CoordPoly& p, int e)
{
    if (e < 0) {
        throw DomainError("pow: negative exponent");
    }
    auto out = CoordPoly::constant(p.ring(), Rational(1));
    for (int i = 0; i < e; ++i) {
        out *= p;
    }
    return out;
}

TensorPoly tensor(const CoordPoly& a, const CoordPoly& b)
{
    require_ring(a.ring(), b.ring(), "tensor");
    TensorPoly t(a.ring());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            t.add_term({ma, mb}, ca * cb);
        }
    }
    return t;
}

Monomial block_monomial(const Word& w, const NCPartition& p, Variant v)
{
    if (static_cast<int>(w.size()) != p.ground_size()) {
        throw ValidationError("block_monomial: partition size differs from word length");
    }
    Monomial m;
    for (const auto& block : p.blocks()) {
        if (v == Variant::reduced && block.size() == 1) {
            continue;
        }
        m *= Monomial::generator(restrict_word(w, block));
    }
    return m;
}

TensorPoly coproduct(CoordRing ring, const Word& w)
{
    check_generator(ring, w);
    const auto& table = nc_table(static_cast<int>(w.size()));
    TensorPoly t(ring);
    for (std::size_t k = 0; k < table.partitions.size(); ++k) {
        t.add_term({block_monomial(w, table.partitions[k], ring.variant),
                    block_monomial(w, table.partitions[table.kreweras_index[k]], ring.variant)},
                   Rational(1));
    }
    return t;
}

namespace
{

// Delta of a single generator power, X_i^-1 being group-like.
TensorPoly coproduct_factor(const CoordRing& ring, const Word& w, int e)
{
    if (e < 0) {
        const auto inv = Monomial::generator(w, e);
        TensorPoly t(ring);
        t.add_term({inv, inv}, Rational(1));
        return t;
    }
    const auto base = coproduct(ring, w);
    TensorPoly t(ring);
    t.add_term({Monomial{}, Monomial{}}, Rational(1));
    for (int i = 0; i < e; ++i) {
        t = t * base;
    }
    return t;
}

TensorPoly coproduct_monomial(const CoordRing& ring, const Monomial& m,
                              std::map<Monomial::Factor, TensorPoly>& cache)
{
    TensorPoly t(ring);
    t.add_term({Monomial{}, Monomial{}}, Rational(1));
    for (const auto& factor : m.factors()) {
        auto it = cache.find(factor);
        if (it == cache.end()) {
            it = cache.emplace(factor, coproduct_factor(ring, factor.first, factor.second)).first;
        }
        t = t * it->second;
    }
    return t;
}

} // namespace

TensorPoly coproduct(const CoordPoly& p)
{
    std::map<Monomial::Factor, TensorPoly> cache;
    TensorPoly out(p.ring());
    for (const auto& [m, c] : p.terms()) {
        const auto image = coproduct_monomial(p.ring(), m, cache);
        for (const auto& [k, d] : image.terms()) {
            out.add_term(k, c * d);
        }
    }
    return out;
}

template <std::size_t N>
Tensor<N + 1> coproduct_on_leg(const Tensor<N>& t, std::size_t leg)
{
    if (leg >= N) {
        throw ValidationError("coproduct_on_leg: leg out of range");
    }
    std::map<Monomial::Factor, TensorPoly> cache;
    Tensor<N + 1> out(t.ring());
    for (const auto& [key, c] : t.terms()) {
        const auto image = coproduct_monomial(t.ring(), key[leg], cache);
        for (const auto& [pair, d] : image.terms()) {
            typename Tensor<N + 1>::Key k;
            std::size_t j = 0;
            for (std::size_t i = 0; i < N; ++i) {
                if (i == leg) {
                    k[j++] = pair[0];
                    k[j++] = pair[1];
                } else {
                    k[j++] = key[i];
                }
            }
            out.add_term(k, c * d);
        }
    }
    return out;
}

template Tensor<3> coproduct_on_leg<2>(const Tensor<2>&, std::size_t);
template Tensor<4> coproduct_on_leg<3>(const Tensor<3>&, std::size_t);

namespace
{

Rational counit_monomial(const Monomial& m)
{
    for (const auto& [w, e] : m.factors()) {
        if (w.size() >= 2) {
            return Rational(0);
        }
    }
    return Rational(1);
}

} // namespace

Rational counit(const CoordPoly& p)
{
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        sum += c * counit_monomial(m);
    }
    return sum;
}

CoordPoly counit_contract(const TensorPoly& t, std::size_t leg)
{
    if (leg > 1) {
        throw ValidationError("counit_contract: leg out of range");
    }
    CoordPoly out(t.ring());
    for (const auto& [key, c] : t.terms()) {
        out.add_term(key[1 - leg], c * counit_monomial(key[leg]));
    }
    return out;
}

namespace
{

std::mutex antipode_mutex;
std::map<std::pair<Variant, Word>, std::map<Monomial, Rational>> antipode_cache;

CoordPoly antipode_of_monomial(const CoordRing& ring, const Monomial& m)
{
    auto out = CoordPoly::constant(ring, Rational(1));
    for (const auto& [w, e] : m.factors()) {
        if (e < 0) {
            // S(X_i^-1) = X_i
            out *= CoordPoly::monomial(ring, Monomial::generator(w, -e));
        } else {
            out *= pow(antipode(ring, w), e);
        }
    }
    return out;
}

} // namespace

CoordPoly antipode(CoordRing ring, const Word& w)
{
    check_generator(ring, w);
    {
        std::lock_guard lock(antipode_mutex);
        auto it = antipode_cache.find({ring.variant, w});
        if (it != antipode_cache.end()) {
            CoordPoly out(ring);
            for (const auto& [m, c] : it->second) {
                out.add_term(m, c);
            }
            return out;
        }
    }
    CoordPoly result(ring);
    if (w.size() == 1) {
        result = CoordPoly::inverse_generator(ring, w[0]);
    } else {
        // From mu(id (x) S) Delta = eps: the pi = 0_n term is
        // X_{i1}...X_{in} S(X_w), the rest is moved across.
        const auto& table = nc_table(static_cast<int>(w.size()));
        CoordPoly rest(ring);
        for (std::size_t k = 0; k < table.partitions.size(); ++k) {
            if (k == table.zero_index) {
                continue;
            }
            auto left = CoordPoly::monomial(ring, block_monomial(w, table.partitions[k], ring.variant));
            rest += left * antipode_of_monomial(
                               ring, block_monomial(w, table.partitions[table.kreweras_index[k]], ring.variant));
        }
        auto inverse_diagonal = CoordPoly::constant(ring, Rational(-1));
        for (int letter : w) {
            inverse_diagonal *= CoordPoly::inverse_generator(ring, letter);
        }
        result = inverse_diagonal * rest;
    }
    std::lock_guard lock(antipode_mutex);
    antipode_cache.try_emplace({ring.variant, w}, result.terms());
    return result;
}

CoordPoly antipode(const CoordPoly& p)
{
    CoordPoly out(p.ring());
    for (const auto& [m, c] : p.terms()) {
        out += c * antipode_of_monomial(p.ring(), m);
    }
    return out;
}

TensorPoly antipode_on_leg(const TensorPoly& t, std::size_t leg)
{
    if (leg > 1) {
        throw ValidationError("antipode_on_leg: leg out of range");
    }
    TensorPoly out(t.ring());
    for (const auto& [key, c] : t.terms()) {
        const auto image = antipode_of_monomial(t.ring(), key[leg]);
        for (const auto& [m, d] : image.terms()) {
            auto k = key;
            k[leg] = m;
            out.add_term(k, c * d);
        }
    }
    return out;
}

CoordPoly multiply(const TensorPoly& t)
{
    CoordPoly out(t.ring());
    for (const auto& [key, c] : t.terms()) {
        out.add_term(key[0] * key[1], c);
    }
    return out;
}

TensorPoly reduced_coproduct(int s, int maxdeg, const Word& w)
{
    if (w.size() < 2) {
        throw ValidationError("reduced_coproduct needs |w| >= 2");
    }
    return coproduct(CoordRing{s, maxdeg, Variant::reduced}, w);
}

TensorPoly formal_group_law(int s, int maxdeg, const Word& w)
{
    return reduced_coproduct(s, maxdeg, w);
}

TensorPoly bilinear_part(int s, int maxdeg, const Word& w)
{
    const auto f = formal_group_law(s, maxdeg, w);
    TensorPoly out(f.ring());
    for (const auto& [key, c] : f.terms()) {
        if (key[0].degree() == 1 && key[1].degree() == 1) {
            out.add_term(key, c);
        }
    }
    return out;
}

std::map<Word, Rational> lie_bracket(int s, int maxdeg, const Word& w, const Word& v)
{
    const CoordRing ring{s, maxdeg, Variant::reduced};
    check_generator(ring, w);
    check_generator(ring, v);
    if (w.size() < 2 || v.size() < 2) {
        throw ValidationError("lie_bracket is defined on generators with |w| >= 2");
    }
    std::map<Word, Rational> out;
    const int len = static_cast<int>(w.size() + v.size()) - 1;
    if (len > maxdeg) {
        return out;
    }
    const auto xw = Monomial::generator(w);
    const auto xv = Monomial::generator(v);
    for (const auto& u : words_of_length(s, len)) {
        const auto b = bilinear_part(s, maxdeg, u);
        Rational c(0);
        if (auto it = b.terms().find({xw, xv}); it != b.terms().end()) {
            c += it->second;
        }
        if (auto it = b.terms().find({xv, xw}); it != b.terms().end()) {
            c -= it->second;
        }
        if (!c.is_zero()) {
            out.emplace(u, c);
        }
    }
    return out;
}

namespace
{

Rational evaluate_monomial(const Monomial& m, const NCSeries& f)
{
    Rational value(1);
    for (const auto& [w, e] : m.factors()) {
        const auto c = f.coeff(w);
        if (e < 0) {
            if (c.is_zero()) {
                throw NotInvertible("evaluate: inverse of a vanishing coefficient");
            }
            for (int i = 0; i < -e; ++i) {
                value /= c;
            }
        } else {
            for (int i = 0; i < e; ++i) {
                value *= c;
            }
        }
    }
    return value;
}

void check_evaluation_point(const CoordRing& ring, const NCSeries& f)
{
    if (f.alphabet_size() != ring.s) {
        throw AlphabetMismatch("evaluate: alphabet differs from the coordinate ring");
    }
    if (ring.variant == Variant::reduced) {
        for (int i = 1; i <= ring.s; ++i) {
            if (f.coeff(Word{i}) != 1) {
                throw DomainError("evaluate: reduced coordinates need a unipotent point");
            }
        }
    }
}

} // namespace

Rational evaluate(const CoordPoly& p, const NCSeries& f)
{
    check_evaluation_point(p.ring(), f);
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        sum += c * evaluate_monomial(m, f);
    }
    return sum;
}

Rational evaluate(const TensorPoly& t, const NCSeries& f, const NCSeries& g)
{
    check_evaluation_point(t.ring(), f);
    check_evaluation_point(t.ring(), g);
    Rational sum(0);
    for (const auto& [key, c] : t.terms()) {
        sum += c * evaluate_monomial(key[0], f) * evaluate_monomial(key[1], g);
    }
    return sum;
}

std::string to_string(const Monomial& m, Variant v)
{
    if (m.is_one()) {
        return "1";
    }
    const char* symbol = v == Variant::full ? "X" : "Xbar";
    std::string out;
    for (const auto& [w, e] : m.factors()) {
        if (!out.empty()) {
            out += "*";
        }
        out += symbol + to_string(w);
        if (e != 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::string to_string(const CoordPoly& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (m.is_one()) {
            out += first ? to_string(c) : (c < 0 ? " - " + to_string(Rational(-c)) : " + " + to_string(c));
        } else {
            out += rational_prefix(c, first) + to_string(m, p.ring().variant);
        }
        first = false;
    }
    return out;
}

std::string to_string(const TensorPoly& t)
{
    if (t.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        out += rational_prefix(c, first) + to_string(key[0], t.ring().variant) + " (x) " +
               to_string(key[1], t.ring().variant);
        first = false;
    }
    return out;
}

} // namespace freeprob
