#include "ilab/rational.hpp"

#include <ostream>

namespace ilab {

namespace {

// FNV-1a over the limbs; cheap and stable within a process.
std::size_t fnv1a(std::size_t seed, const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::size_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace

std::size_t hash_int(const Int& z) {
    const mpz_srcptr m = z.get_mpz_t();
    std::size_t h = 0xcbf29ce484222325ull;
    int sz = m->_mp_size;
    h = fnv1a(h, &sz, sizeof(sz));
    std::size_t limbs = static_cast<std::size_t>(sz < 0 ? -sz : sz);
    h = fnv1a(h, m->_mp_d, limbs * sizeof(mp_limb_t));
    return h;
}

std::size_t hash_combine(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (sgn(den) == 0) throw invalid_input("Rat::parse: zero denominator in '" + std::string(text) + "'");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw invalid_input("Rat::parse: malformed rational '" + std::string(text) + "'");
    }
}

Int Rat::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rat::hash() const {
    return hash_combine(hash_int(q_.get_num()), hash_int(q_.get_den()));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Int binom(const Int& n, unsigned r) {
    if (sgn(n) < 0 || n < r) return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), r);
    return out;
}

Int binom(long long n, unsigned r) {
    return binom(Int(std::to_string(n)), r);
}

} // namespace ilab
