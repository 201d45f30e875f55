#include "ilab/bounds.hpp"

namespace ilab {

namespace {

Rat profile_sum(const IncidenceProfile& p, const auto& weight) {
    Rat acc = 0;
    for (const auto& [k, c] : p.counts) acc += weight(k) * Rat(c);
    return acc;
}

} // namespace

Rat melchior_slack(const IncidenceProfile& t) {
    Rat tail = 0;
    for (const auto& [k, c] : t.counts)
        if (k >= 3) tail += Rat(static_cast<long long>(k) - 3) * Rat(c);
    return Rat(t.at(2)) - Rat(3) - tail;
}

Rat elliott_t23_lb(long long t_total) {
    return Rat(Int(std::to_string(t_total)) + 3, Int(2));
}

Rat kelly_moser_slack(const IncidenceProfile& t) {
    Rat incidences = profile_sum(t, [](int k) { return Rat(k); });
    return Rat(3) * Rat(t.total()) - Rat(3) - incidences;
}

Rat eq1_lb(const PointDegreeProfile& degrees) {
    Rat weighted = 0;
    for (const auto& [i, c] : degrees.counts) weighted += Rat(i) * Rat(c);
    return Rat(2) + weighted / Rat(6);
}

BoundResult t23_lb(long long n, long long k) {
    BoundResult r;
    r.name = "t23_lb";
    r.value = Rat(k) * Rat(n - k) - Rat(k) * Rat(k - 1);
    r.applicable = k >= 1 && n >= 72 * k * k + 2 * k - 1;
    r.threshold = "n >= 72k^2 + 2k - 1";
    return r;
}

BoundResult circles_lb(long long n, long long k) {
    BoundResult r;
    r.name = "circles_lb";
    r.value = Rat(2 * k - 1) * (Rat(n) * Rat(n) - Rat(2 * k + 1) * Rat(n)) / Rat(8);
    r.applicable = k >= 1 && n >= 72 * k * k + 2 * k;
    r.threshold = "n >= 72k^2 + 2k, k >= 1";
    return r;
}

Rat elliott_circles_lb(long long n) {
    Rat half{n - 1, 2};
    return Rat(1) + Rat(binom(n - 1, 2)) - Rat(half.floor());
}

Rat plane_melchior_slack(long long n, const IncidenceProfile& m) {
    Rat sum = profile_sum(m, [](int k) { return Rat(k) * Rat(k - 4); });
    return Rat(-3 * n) - sum;
}

Rat m3_lb(long long n, const IncidenceProfile& m) {
    Rat tail = 0;
    for (const auto& [k, c] : m.counts)
        if (k >= 4) tail += Rat(static_cast<long long>(k) * (k - 4), 3) * Rat(c);
    return Rat(n) + tail;
}

Rat m34_lb(long long n, long long m_total) {
    return (Rat(5) * Rat(m_total) + Rat(3) * Rat(n)) / Rat(8);
}

Rat planes3_lb(long long n) {
    return Rat(4, 13) * Rat(binom(n, 2));
}

Rat lemma_total_planes_slack(long long n, const IncidenceProfile& m) {
    Rat pairs = profile_sum(m, [](int k) { return Rat(binom(static_cast<long long>(k), 2)); });
    return Rat(6) * Rat(m.total()) - Rat(3 * n) - pairs;
}

BoundResult planes_total_lb(long long n, long long k) {
    BoundResult r;
    r.name = "planes_total_lb";
    r.value = Rat(1) + Rat(k) * Rat(binom(n - k, 2)) - Rat(binom(k, 2)) * Rat(n - k, 2);
    // n >= 54k^2 + 9k/2, compared exactly as 2n >= 108k^2 + 9k.
    r.applicable = k >= 1 && 2 * n >= 108 * k * k + 9 * k;
    r.threshold = "n >= 54k^2 + (9/2)k";
    return r;
}

Rat planes_total_lb_floor(long long n, long long k) {
    Rat half{n - k, 2};
    return Rat(1) + Rat(k) * Rat(binom(n - k, 2)) - Rat(binom(k, 2)) * Rat(half.floor());
}

BoundResult planes34_lb(long long n, long long k) {
    BoundResult r;
    r.name = "planes34_lb";
    r.value = Rat(k) * Rat(binom(n - k, 2)) - Rat(n - k) * Rat(binom(k, 2));
    // n >= (184 + 8/25) k^2 + 4k, compared exactly as 25n >= 4608k^2 + 100k.
    r.applicable = k >= 1 && 25 * n >= 4608 * k * k + 100 * k;
    r.threshold = "n >= (184 + 8/25)k^2 + 4k";
    return r;
}

Rat spheres4_lb(long long n) {
    return Rat(9, 208) * Rat(binom(n, 3));
}

Rat spheres_total_lb(long long n, const Int& t3_cap) {
    return Rat(1) + Rat(binom(n - 1, 3)) - Rat(t3_cap);
}

Int orchard_upper(long long n) {
    // n^2/6 - 25n/78 = (13n^2 - 25n)/78
    Rat v = (Rat(13) * Rat(n) * Rat(n) - Rat(25) * Rat(n)) / Rat(78);
    return v.floor();
}

Int orchard_lower(long long n) {
    // n^2/6 - n/2 + 1 = (n^2 - 3n + 6)/6
    Rat v = (Rat(n) * Rat(n) - Rat(3) * Rat(n) + Rat(6)) / Rat(6);
    return v.floor();
}

Pg3qCounts pg3q(const Int& q) {
    Pg3qCounts out;
    Int q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    out.points_and_planes = q3 + q2 + q + 1;
    out.lines = q4 + q3 + 2 * q2 + q + 1;
    out.prime_power = false;
    if (q >= 2) {
        // q = p^e for a prime p iff dividing out the smallest prime factor
        // repeatedly reaches 1.
        Int rest = q;
        Int p = 2;
        while (p * p <= rest && rest % p != 0) ++p;
        if (p * p > rest) p = rest; // q is prime
        while (rest % p == 0) rest /= p;
        if (rest == 1) {
            int probab = mpz_probab_prime_p(p.get_mpz_t(), 40);
            out.prime_power = probab > 0;
        }
    }
    return out;
}

CollinearClassMaxima collinear_class_maxima(long long n, long long k) {
    CollinearClassMaxima out;
    out.lines_max = binom(k, 2) + to_int(k) * to_int(n - k) + 1;
    out.planes_max = binom(k, 3) + to_int(n - k) * binom(k, 2) + to_int(k);
    out.spheres_max = binom(k, 4) + to_int(n - k) * binom(k, 3) + binom(k, 2) * binom(n - k, 2);
    return out;
}

} // namespace ilab
