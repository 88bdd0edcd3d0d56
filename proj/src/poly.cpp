#include "ellevel/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ellevel
{

Monomial Monomial::of(Symbol s, unsigned e)
{
    Monomial m;
    m.m_exps[index(s)] = static_cast<std::uint16_t>(e);
    m.m_degree = e;
    return m;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    Monomial r;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        r.m_exps[i] = static_cast<std::uint16_t>(m_exps[i] + o.m_exps[i]);
    }
    r.m_degree = m_degree + o.m_degree;
    return r;
}

bool Monomial::divisible_by(const Monomial &o) const
{
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (m_exps[i] < o.m_exps[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::operator/(const Monomial &o) const
{
    Monomial r;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        r.m_exps[i] = static_cast<std::uint16_t>(m_exps[i] - o.m_exps[i]);
    }
    r.m_degree = m_degree - o.m_degree;
    return r;
}

Monomial Monomial::with(Symbol s, unsigned e) const
{
    Monomial r = *this;
    r.m_degree = r.m_degree - r.m_exps[index(s)] + e;
    r.m_exps[index(s)] = static_cast<std::uint16_t>(e);
    return r;
}

MultiPoly::MultiPoly(const BigRational &c)
{
    if (!c.is_zero()) {
        m_terms.emplace_back(Monomial{}, c);
    }
}

MultiPoly MultiPoly::symbol(Symbol s, unsigned e) { return term(BigRational(1), Monomial::of(s, e)); }

MultiPoly MultiPoly::term(const BigRational &c, const Monomial &m)
{
    MultiPoly p;
    if (!c.is_zero()) {
        p.m_terms.emplace_back(m, c);
    }
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term &x, const Term &y) { return grlex_greater(x.first, y.first); });
    MultiPoly p;
    for (auto &t : terms) {
        if (!p.m_terms.empty() && p.m_terms.back().first == t.first) {
            p.m_terms.back().second += t.second;
            if (p.m_terms.back().second.is_zero()) {
                p.m_terms.pop_back();
            }
        } else if (!t.second.is_zero()) {
            p.m_terms.push_back(std::move(t));
        }
    }
    return p;
}

std::optional<BigRational> MultiPoly::as_constant() const
{
    if (m_terms.empty()) {
        return BigRational(0);
    }
    if (m_terms.size() == 1 && m_terms.front().first.is_one()) {
        return m_terms.front().second;
    }
    return std::nullopt;
}

BigRational MultiPoly::constant_term() const
{
    if (!m_terms.empty() && m_terms.back().first.is_one()) {
        return m_terms.back().second;
    }
    return BigRational(0);
}

unsigned MultiPoly::degree_in(Symbol s) const
{
    unsigned d = 0;
    for (const auto &t : m_terms) {
        d = std::max(d, t.first[s]);
    }
    return d;
}

MultiPoly MultiPoly::coefficient_of(Symbol s, unsigned e) const
{
    std::vector<Term> out;
    for (const auto &t : m_terms) {
        if (t.first[s] == e) {
            out.emplace_back(t.first.with(s, 0), t.second);
        }
    }
    return from_terms(std::move(out));
}

namespace
{

// Merge of two sorted term lists; sign = +1 or -1 applied to the second.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term> &x,
                                         const std::vector<MultiPoly::Term> &y, bool negate)
{
    std::vector<MultiPoly::Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && grlex_greater(x[i].first, y[j].first))) {
            out.push_back(x[i++]);
        } else if (i == x.size() || grlex_greater(y[j].first, x[i].first)) {
            out.emplace_back(y[j].first, negate ? -y[j].second : y[j].second);
            ++j;
        } else {
            BigRational c = negate ? x[i].second - y[j].second : x[i].second + y[j].second;
            if (!c.is_zero()) {
                out.emplace_back(x[i].first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    m_terms = merge_terms(m_terms, o.m_terms, false);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    if (o.is_zero()) {
        return *this;
    }
    m_terms = merge_terms(m_terms, o.m_terms, true);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const BigRational &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &t : m_terms) {
        t.second *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.size() == 1 && a.m_terms.front().first.is_one()) {
        return b * a.m_terms.front().second;
    }
    if (b.size() == 1 && b.m_terms.front().first.is_one()) {
        return a * b.m_terms.front().second;
    }
    std::vector<MultiPoly::Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto &x : a.m_terms) {
        for (const auto &y : b.m_terms) {
            prods.emplace_back(x.first * y.first, x.second * y.second);
        }
    }
    return MultiPoly::from_terms(std::move(prods));
}

MultiPoly operator-(MultiPoly a)
{
    for (auto &t : a.m_terms) {
        t.second = -t.second;
    }
    return a;
}

MultiPoly pow(const MultiPoly &p, unsigned e)
{
    MultiPoly result(1);
    MultiPoly base = p;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

void PolyAccumulator::add_product(const MultiPoly &x, const MultiPoly &y)
{
    for (const auto &tx : x.terms()) {
        for (const auto &ty : y.terms()) {
            m_buf.emplace_back(tx.first * ty.first, tx.second * ty.second);
        }
    }
}

void PolyAccumulator::add_product(const MultiPoly &x, const MultiPoly &y, const BigRational &scale)
{
    if (scale.is_zero()) {
        return;
    }
    for (const auto &tx : x.terms()) {
        const BigRational cx = tx.second * scale;
        for (const auto &ty : y.terms()) {
            m_buf.emplace_back(tx.first * ty.first, cx * ty.second);
        }
    }
}

std::optional<MultiPoly> divide_by_term(const MultiPoly &p, const BigRational &c, const Monomial &m)
{
    if (c.is_zero()) {
        throw std::domain_error("divide_by_term: zero divisor");
    }
    const BigRational inv = c.inverse();
    std::vector<MultiPoly::Term> out;
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        if (!t.first.divisible_by(m)) {
            return std::nullopt;
        }
        out.emplace_back(t.first / m, t.second * inv);
    }
    return MultiPoly::from_terms(std::move(out));
}

MultiPoly partial_derivative(const MultiPoly &p, Symbol s)
{
    std::vector<MultiPoly::Term> out;
    for (const auto &t : p.terms()) {
        const unsigned e = t.first[s];
        if (e > 0) {
            out.emplace_back(t.first.with(s, e - 1), t.second * BigRational(static_cast<long>(e)));
        }
    }
    return MultiPoly::from_terms(std::move(out));
}

namespace
{

// Caches successive powers of a polynomial.
class PowerCache
{
public:
    explicit PowerCache(MultiPoly base) { m_powers.emplace_back(1); m_powers.push_back(std::move(base)); }
    const MultiPoly &get(unsigned e)
    {
        while (m_powers.size() <= e) {
            m_powers.push_back(m_powers.back() * m_powers[1]);
        }
        return m_powers[e];
    }

private:
    std::vector<MultiPoly> m_powers;
};

} // namespace

MultiPoly substitute(const MultiPoly &p, const Bindings &bindings)
{
    if (bindings.empty() || p.is_zero()) {
        return p;
    }
    std::map<Symbol, PowerCache> caches;
    for (const auto &[s, v] : bindings) {
        caches.emplace(s, PowerCache(v));
    }
    std::vector<MultiPoly::Term> untouched;
    for (const auto &[mono, coeff] : p.terms()) {
        Monomial free_part = mono;
        bool any_bound = false;
        for (const auto &[s, v] : bindings) {
            if (mono[s] > 0) {
                any_bound = true;
                free_part = free_part.with(s, 0);
            }
        }
        if (!any_bound) {
            untouched.emplace_back(mono, coeff);
            continue;
        }
        MultiPoly t = MultiPoly::term(coeff, free_part);
        for (auto &[s, cache] : caches) {
            const unsigned e = mono[s];
            if (e > 0) {
                t = t * cache.get(e);
            }
        }
        untouched.insert(untouched.end(), t.terms().begin(), t.terms().end());
    }
    return MultiPoly::from_terms(std::move(untouched));
}

MultiPoly reduce_power(const MultiPoly &p, Symbol s, unsigned k, const MultiPoly &replacement)
{
    if (k == 0) {
        throw std::invalid_argument("reduce_power: exponent must be positive");
    }
    if (p.degree_in(s) < k) {
        return p;
    }
    PowerCache cache(replacement);
    std::vector<MultiPoly::Term> keep;
    for (const auto &[mono, coeff] : p.terms()) {
        const unsigned e = mono[s];
        if (e < k) {
            keep.emplace_back(mono, coeff);
            continue;
        }
        const unsigned q = e / k;
        const MultiPoly t = MultiPoly::term(coeff, mono.with(s, e % k)) * cache.get(q);
        keep.insert(keep.end(), t.terms().begin(), t.terms().end());
    }
    MultiPoly out = MultiPoly::from_terms(std::move(keep));
    // The replacement may itself contain s.
    return out.degree_in(s) >= k ? reduce_power(out, s, k, replacement) : out;
}

MultiPoly apply_derivation(const MultiPoly &p, const Bindings &images)
{
    MultiPoly out;
    for (const auto &[s, img] : images) {
        if (p.contains(s) && !img.is_zero()) {
            out += partial_derivative(p, s) * img;
        }
    }
    return out;
}

BigRational eval(const MultiPoly &p, const std::map<Symbol, BigRational> &point)
{
    BigRational acc(0);
    for (const auto &[mono, coeff] : p.terms()) {
        BigRational t = coeff;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const auto s = static_cast<Symbol>(i);
            const unsigned e = mono[s];
            if (e == 0) {
                continue;
            }
            auto it = point.find(s);
            if (it == point.end()) {
                throw UnboundSymbol(s);
            }
            BigRational pw(mpq_class(1));
            for (unsigned k = 0; k < e; ++k) {
                pw *= it->second;
            }
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

std::complex<double> eval(const MultiPoly &p, const std::map<Symbol, std::complex<double>> &point)
{
    std::complex<double> acc{0.0, 0.0};
    for (const auto &[mono, coeff] : p.terms()) {
        std::complex<double> t{coeff.to_double(), 0.0};
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const auto s = static_cast<Symbol>(i);
            const unsigned e = mono[s];
            if (e == 0) {
                continue;
            }
            auto it = point.find(s);
            if (it == point.end()) {
                throw UnboundSymbol(s);
            }
            t *= std::pow(it->second, static_cast<int>(e));
        }
        acc += t;
    }
    return acc;
}

std::string to_string(const MultiPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[mono, coeff] : p.terms()) {
        const bool negative = coeff.sign() < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const BigRational mag = coeff.abs();
        std::string body;
        if (!mag.is_one() || mono.is_one()) {
            body = mag.to_string();
        }
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const unsigned e = mono[static_cast<Symbol>(i)];
            if (e == 0) {
                continue;
            }
            if (!body.empty()) {
                body += '*';
            }
            body += kSymbolNames[i];
            if (e > 1) {
                body += '^' + std::to_string(e);
            }
        }
        out += body;
    }
    return out;
}

namespace
{

class Parser
{
public:
    explicit Parser(std::string_view text) : m_text(text) {}

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_ws();
        if (m_pos != m_text.size()) {
            fail("unexpected character");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        std::ostringstream os;
        os << "parse_poly: " << what << " at offset " << m_pos << " in '" << m_text << "'";
        throw std::invalid_argument(os.str());
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    bool accept(char ch)
    {
        skip_ws();
        if (m_pos < m_text.size() && m_text[m_pos] == ch) {
            ++m_pos;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const auto d = unary().as_constant();
                if (!d || d->is_zero()) {
                    fail("division only by nonzero constants");
                }
                acc *= d->inverse();
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            if (start == m_pos) {
                fail("expected natural exponent");
            }
            return pow(base, static_cast<unsigned>(std::stoul(std::string(m_text.substr(start, m_pos - start)))));
        }
        return base;
    }

    MultiPoly atom()
    {
        skip_ws();
        if (accept('(')) {
            MultiPoly inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (m_pos >= m_text.size()) {
            fail("unexpected end of input");
        }
        const char ch = m_text[m_pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            return MultiPoly(BigRational::parse(m_text.substr(start, m_pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isalnum(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            const auto word = m_text.substr(start, m_pos - start);
            const auto s = symbol_from_name(word);
            if (!s) {
                m_pos = start;
                fail("unknown symbol '" + std::string(word) + "'");
            }
            return MultiPoly::symbol(*s);
        }
        fail("unexpected character");
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

} // namespace ellevel
