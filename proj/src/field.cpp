#include "qpc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qpc {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

unsigned poly_degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return unsigned(i);
    return 0;
}

// Remainder of a / b over GF(p); b must be monic.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    const unsigned db = poly_degree(b);
    while (true) {
        unsigned da = poly_degree(a);
        if (da < db || (da == 0 && a[0] == 0)) break;
        unsigned lead = a[da];
        // subtract lead * x^(da-db) * b
        for (unsigned j = 0; j <= db; ++j) {
            unsigned idx = da - db + j;
            a[idx] = (a[idx] + (p - lead % p) * b[j]) % p;
        }
    }
    a.resize(db);
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Trial division against every monic polynomial of degree <= deg(f)/2.
bool is_irreducible(const Poly& f, unsigned p) {
    const unsigned k = poly_degree(f);
    if (k == 0) return false;
    for (unsigned d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = ipow_checked(p, d);
        for (std::uint64_t e = 0; e < count; ++e) {
            Poly div(d + 1, 0);
            std::uint64_t v = e;
            for (unsigned j = 0; j < d; ++j) {
                div[j] = unsigned(v % p);
                v /= p;
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(f, div, p))) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over GF(p),
// comparing coefficient lists from the constant term upward. The enumeration
// makes the constant term the most significant digit so candidates appear in
// exactly that order.
Poly canonical_modulus(unsigned p, unsigned k) {
    std::uint64_t count = ipow_checked(p, k);
    for (std::uint64_t e = 0; e < count; ++e) {
        Poly f(k + 1, 0);
        std::uint64_t v = e;
        for (unsigned j = k; j-- > 0;) {
            f[j] = unsigned(v % p);
            v /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field::Field(unsigned p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = ipow_checked(p, k);
    if (q > (1u << 16)) throw std::invalid_argument("field size exceeds 2^16");
    q_ = unsigned(q);
    if (k > 1) {
        Poly mod = canonical_modulus(p, k);
        modulus_.assign(mod.begin(), mod.end());
    }
    tables_ = q_ <= 256;
    if (tables_) {
        add_.resize(std::size_t(q_) * q_);
        mul_.resize(std::size_t(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            neg_[a] = neg_slow(Elem(a));
            for (unsigned b = 0; b < q_; ++b) {
                add_[std::size_t(a) * q_ + b] = add_slow(Elem(a), Elem(b));
                mul_[std::size_t(a) * q_ + b] = mul_slow(Elem(a), Elem(b));
            }
        }
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[std::size_t(a) * q_ + b] == 1) {
                    inv_[a] = Elem(b);
                    break;
                }
    }
}

Elem Field::add_slow(Elem a, Elem b) const {
    if (k_ == 1) return Elem((unsigned(a) + b) % p_);
    unsigned r = 0, pw = 1, x = a, y = b;
    for (unsigned j = 0; j < k_; ++j) {
        r += ((x % p_ + y % p_) % p_) * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return Elem(r);
}

Elem Field::neg_slow(Elem a) const {
    if (k_ == 1) return Elem((p_ - unsigned(a) % p_) % p_);
    unsigned r = 0, pw = 1, x = a;
    for (unsigned j = 0; j < k_; ++j) {
        r += ((p_ - x % p_) % p_) * pw;
        x /= p_;
        pw *= p_;
    }
    return Elem(r);
}

Elem Field::mul_slow(Elem a, Elem b) const {
    if (k_ == 1) return Elem((std::uint64_t(a) * b) % p_);
    // schoolbook product of the coefficient vectors, then reduce by the
    // monic modulus
    std::vector<unsigned> da(k_), db(k_), prod(2 * k_ - 1, 0);
    unsigned x = a, y = b;
    for (unsigned j = 0; j < k_; ++j, x /= p_, y /= p_) {
        da[j] = x % p_;
        db[j] = y % p_;
    }
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
        unsigned c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    unsigned r = 0, pw = 1;
    for (unsigned j = 0; j < k_; ++j, pw *= p_) r += prod[j] * pw;
    return Elem(r);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    if (tables_) return inv_[a];
    return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string Field::spec_string() const {
    std::ostringstream os;
    os << p_ << '^' << k_;
    if (k_ > 1) {
        os << ";mod=";
        for (std::size_t j = 0; j < modulus_.size(); ++j) {
            if (j) os << ',';
            os << modulus_[j];
        }
    }
    return os.str();
}

FieldPtr Field::get(unsigned p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(p, k));
    cache.emplace(key, f);
    return f;
}

FieldPtr Field::parse_spec(const std::string& text) {
    std::string head = text, mod;
    if (auto semi = text.find(';'); semi != std::string::npos) {
        head = text.substr(0, semi);
        mod = text.substr(semi + 1);
    }
    auto caret = head.find('^');
    if (caret == std::string::npos) throw ParseError("field spec must be of the form p^k: " + text);
    unsigned p = 0, k = 0;
    try {
        p = unsigned(std::stoul(head.substr(0, caret)));
        k = unsigned(std::stoul(head.substr(caret + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad field spec: " + text);
    }
    FieldPtr f;
    try {
        f = get(p, k);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad field spec: ") + e.what());
    }
    if (!mod.empty()) {
        if (mod.rfind("mod=", 0) != 0) throw ParseError("expected mod= clause: " + text);
        std::vector<Elem> coeffs;
        std::istringstream is(mod.substr(4));
        std::string item;
        while (std::getline(is, item, ',')) coeffs.push_back(Elem(std::stoul(item)));
        if (!std::equal(coeffs.begin(), coeffs.end(), f->modulus().begin(), f->modulus().end()))
            throw ParseError("modulus does not match the canonical irreducible for " + head);
    } else if (k > 1) {
        throw ParseError("extension field spec must carry its modulus: " + text);
    }
    return f;
}

std::pair<unsigned, unsigned> Field::factor_prime_power(unsigned q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    unsigned p = q;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned k = 0, v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1) throw std::invalid_argument("q is not a prime power: " + std::to_string(q));
    return {p, k};
}

}  // namespace qpc
