#include "qmf/characters.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qmf {

namespace {

long mod_pos(long n, long m) {
    long r = n % m;
    return r < 0 ? r + m : r;
}

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b = mod_pos(b, m);
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

// fraction of a full turn, reduced into [0,1)
std::pair<long, long> reduce_angle(long num, long den) {
    num = mod_pos(num, den);
    long g = std::gcd(num, den);
    if (num == 0) return {0, 1};
    return {num / g, den / g};
}

std::pair<long, long> add_angles(std::pair<long, long> a, std::pair<long, long> b) {
    long den = std::lcm(a.second, b.second);
    long num = a.first * (den / a.second) + b.first * (den / b.second);
    return reduce_angle(num, den);
}

// CRT lift: x == a mod m, x == 1 mod n, for coprime m, n
long crt_lift(long a, long m, long n) {
    if (n == 1) return mod_pos(a, m);
    for (long x = 0; x < m * n; ++x)
        if (mod_pos(x, m) == mod_pos(a, m) && mod_pos(x, n) == 1) return x;
    throw Error("crt lift failed");
}

} // namespace

// ---------------------------------------------------------------------------
// unit group structure

std::vector<DirichletCharacter::Generator> DirichletCharacter::unit_group_generators(long q) {
    std::vector<Generator> gens;
    if (q <= 2) return gens;
    if (q == 4) {
        gens.push_back({3, 2});
        return gens;
    }
    if (q % 2 == 0) {
        // q = 2^a, a >= 3: generated by -1 and 5
        long half_order = q / 4; // order of 5
        gens.push_back({q - 1, 2});
        gens.push_back({5, half_order});
        return gens;
    }
    // odd prime power: cyclic; find the smallest generator
    long phi = euler_phi(q);
    auto prime_factors = factorize(phi);
    for (long g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool primitive = true;
        for (const auto& pp : prime_factors) {
            if (pow_mod(g, phi / pp.prime, q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gens.push_back({g, phi});
            return gens;
        }
    }
    throw Error("no generator found for unit group");
}

void DirichletCharacter::Component::build_dlog() {
    dlog.clear();
    std::vector<long> idx(gens.size(), 0);
    while (true) {
        long value = 1 % q;
        for (std::size_t i = 0; i < gens.size(); ++i)
            value = (value * pow_mod(gens[i].g, idx[i], q)) % q;
        dlog.emplace(value, idx);
        // advance the mixed-radix counter
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++idx[i] < gens[i].order) break;
            idx[i] = 0;
        }
        if (i == gens.size()) break;
        if (gens.empty()) break;
    }
    if (gens.empty()) dlog.emplace(1 % q, std::vector<long>{});
}

std::pair<long, long> DirichletCharacter::Component::angle_at(long unit) const {
    auto it = dlog.find(mod_pos(unit, q));
    if (it == dlog.end()) throw Error("value is not a unit in the component group");
    std::pair<long, long> a{0, 1};
    for (std::size_t i = 0; i < gens.size(); ++i)
        a = add_angles(a, reduce_angle(exps[i] * it->second[i], gens[i].order));
    return a;
}

DirichletCharacter::Component DirichletCharacter::make_component(long q,
                                                                 const std::vector<long>& exps) {
    Component c;
    c.q = q;
    c.prime = factorize(q).front().prime;
    c.gens = unit_group_generators(q);
    if (exps.size() != c.gens.size()) throw Error("component exponent count mismatch");
    c.exps = exps;
    for (std::size_t i = 0; i < c.exps.size(); ++i) c.exps[i] = mod_pos(c.exps[i], c.gens[i].order);
    c.build_dlog();
    return c;
}

// ---------------------------------------------------------------------------
// construction

void DirichletCharacter::finalize() {
    long ord = 1;
    for (const auto& c : components_)
        for (std::size_t i = 0; i < c.gens.size(); ++i) {
            long d = c.gens[i].order / std::gcd(c.gens[i].order, c.exps[i] == 0 ? c.gens[i].order : c.exps[i]);
            ord = std::lcm(ord, d);
        }
    order_ = ord;
    if (modulus_ <= 2) {
        parity_ = 0;
    } else {
        auto a = angle(modulus_ - 1);
        if (!a) throw Error("character undefined at -1");
        parity_ = (a->second == 1) ? 0 : 1; // angle 0 or 1/2
    }
}

DirichletCharacter DirichletCharacter::from_components(long modulus, std::vector<Component> comps,
                                                       std::string spec) {
    DirichletCharacter chi;
    chi.modulus_ = modulus;
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.prime < b.prime; });
    chi.components_ = std::move(comps);
    chi.spec_ = std::move(spec);
    chi.finalize();
    return chi;
}

DirichletCharacter DirichletCharacter::trivial(long d) {
    if (d < 1) throw Error("trivial character needs modulus >= 1");
    std::vector<Component> comps;
    for (const auto& pp : factorize(d)) {
        auto gens = unit_group_generators(pp.value);
        comps.push_back(make_component(pp.value, std::vector<long>(gens.size(), 0)));
    }
    return from_components(d, std::move(comps), "trivial:" + std::to_string(d));
}

DirichletCharacter DirichletCharacter::kronecker(long D) {
    if (D == 1) {
        auto chi = trivial(1);
        chi.set_spec("kronecker:1");
        return chi;
    }
    if (!is_discriminant(D)) throw NotADiscriminant("kronecker character needs D == 0,1 mod 4");
    long r = D < 0 ? -D : D;
    std::vector<Component> comps;
    for (const auto& pp : factorize(r)) {
        auto gens = unit_group_generators(pp.value);
        std::vector<long> exps(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            long lift = crt_lift(gens[i].g, pp.value, r / pp.value);
            int v = kronecker_symbol(D, lift);
            if (v == 1) {
                exps[i] = 0;
            } else if (v == -1) {
                if (gens[i].order % 2 != 0) throw Error("kronecker component needs even generator order");
                exps[i] = gens[i].order / 2;
            } else {
                throw Error("kronecker symbol vanished on a unit");
            }
        }
        comps.push_back(make_component(pp.value, exps));
    }
    return from_components(r, std::move(comps), "kronecker:" + std::to_string(D));
}

DirichletCharacter DirichletCharacter::prime_power(long q, long image_exponent) {
    auto f = factorize(q);
    if (f.size() != 1) throw Error("prime_power character needs a prime-power modulus");
    auto gens = unit_group_generators(q);
    if (gens.size() != 1) throw Error("prime_power constructor needs a cyclic unit group");
    auto chi = from_components(q, {make_component(q, {image_exponent})},
                               "custom:" + std::to_string(q));
    return chi;
}

// ---------------------------------------------------------------------------
// evaluation

std::optional<std::pair<long, long>> DirichletCharacter::angle(long n) const {
    if (modulus_ == 1) return std::pair<long, long>{0, 1};
    long r = mod_pos(n, modulus_);
    if (std::gcd(r, modulus_) != 1) return std::nullopt;
    std::pair<long, long> a{0, 1};
    for (const auto& c : components_) a = add_angles(a, c.angle_at(r));
    return a;
}

RingValue DirichletCharacter::eval(long n) const {
    auto a = angle(n);
    if (!a) return RingValue(0);
    auto [num, den] = *a;
    if (order_ <= 2) {
        if (den == 1) return RingValue(1);
        if (den == 2) return RingValue(-1);
        throw Error("value order exceeds character order");
    }
    if (order_ % den != 0) throw Error("value order exceeds character order");
    return RingValue(CyclotomicElement::zeta_power(order_, num * (order_ / den)));
}

// ---------------------------------------------------------------------------
// algebra

DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) {
    long m = std::lcm(a.modulus(), b.modulus());
    std::vector<DirichletCharacter::Component> comps;
    for (const auto& pp : factorize(m)) {
        auto gens = DirichletCharacter::unit_group_generators(pp.value);
        std::vector<long> exps(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            long lift = crt_lift(gens[i].g, pp.value, m / pp.value);
            auto va = a.angle(lift);
            auto vb = b.angle(lift);
            if (!va || !vb) throw Error("character product undefined on a unit");
            auto ang = add_angles(*va, *vb);
            if (gens[i].order % ang.second != 0)
                throw Error("product value order does not divide the generator order");
            exps[i] = ang.first * (gens[i].order / ang.second);
        }
        comps.push_back(DirichletCharacter::make_component(pp.value, exps));
    }
    return DirichletCharacter::from_components(m, std::move(comps),
                                               "prod(" + a.spec() + "," + b.spec() + ")");
}

DirichletCharacter DirichletCharacter::induced(long M) const {
    if (M < 1 || M % modulus_ != 0) throw NotDivisible("induced modulus must be a multiple of the modulus");
    std::vector<Component> comps;
    for (const auto& pp : factorize(M)) {
        auto gens = unit_group_generators(pp.value);
        std::vector<long> exps(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            long lift = crt_lift(gens[i].g, pp.value, M / pp.value);
            auto v = angle(lift);
            if (!v) throw Error("induction hit a non-unit");
            if (gens[i].order % v->second != 0)
                throw Error("induced value order does not divide the generator order");
            exps[i] = v->first * (gens[i].order / v->second);
        }
        comps.push_back(make_component(pp.value, exps));
    }
    return from_components(M, std::move(comps),
                           "induce(" + spec_ + "," + std::to_string(M) + ")");
}

std::vector<std::pair<long, DirichletCharacter>> DirichletCharacter::decompose() const {
    std::vector<std::pair<long, DirichletCharacter>> out;
    for (const auto& c : components_) {
        auto comp = from_components(c.q, {c}, "custom:" + std::to_string(c.q));
        out.emplace_back(c.q, std::move(comp));
    }
    return out;
}

DirichletCharacter DirichletCharacter::component_at(long d) const {
    if (d < 1 || modulus_ % d != 0 || std::gcd(d, modulus_ / d) != 1)
        throw BadUnitaryDivisor("component_at needs a unitary divisor of the modulus");
    std::vector<Component> comps;
    for (const auto& c : components_)
        if (d % c.prime == 0) comps.push_back(c);
    return from_components(d, std::move(comps), "custom:" + std::to_string(d));
}

bool DirichletCharacter::same_values(const DirichletCharacter& a, const DirichletCharacter& b,
                                     long bound) {
    for (long n = 0; n <= bound; ++n)
        if (a.eval(n) != b.eval(n)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// grammar

namespace {

DirichletCharacter parse_character_at(const std::string& s, std::size_t& pos);

long parse_long_at(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("expected an integer in character spec: " + s);
    return std::stol(s.substr(start, pos - start));
}

void expect(const std::string& s, std::size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw Error(std::string("expected '") + c + "' in character spec: " + s);
    ++pos;
}

DirichletCharacter parse_character_at(const std::string& s, std::size_t& pos) {
    auto starts_with = [&](const char* kw) {
        return s.compare(pos, std::string::traits_type::length(kw), kw) == 0;
    };
    if (starts_with("trivial:")) {
        pos += 8;
        return DirichletCharacter::trivial(parse_long_at(s, pos));
    }
    if (starts_with("kronecker:")) {
        pos += 10;
        return DirichletCharacter::kronecker(parse_long_at(s, pos));
    }
    if (starts_with("prod(")) {
        pos += 5;
        DirichletCharacter acc = parse_character_at(s, pos);
        while (pos < s.size() && s[pos] == ',') {
            ++pos;
            acc = multiply(acc, parse_character_at(s, pos));
        }
        expect(s, pos, ')');
        return acc;
    }
    if (starts_with("induce(")) {
        pos += 7;
        DirichletCharacter base = parse_character_at(s, pos);
        expect(s, pos, ',');
        long M = parse_long_at(s, pos);
        expect(s, pos, ')');
        return base.induced(M);
    }
    throw Error("unrecognized character spec: " + s);
}

} // namespace

DirichletCharacter parse_character(const std::string& text) {
    std::size_t pos = 0;
    auto chi = parse_character_at(text, pos);
    if (pos != text.size()) throw Error("trailing characters in character spec: " + text);
    chi.set_spec(text);
    return chi;
}

DirichletCharacter chi_minus4_power(long e) {
    long r = ((e % 2) + 2) % 2;
    if (e == 0) return DirichletCharacter::trivial(1);
    return r == 1 ? DirichletCharacter::kronecker(-4) : DirichletCharacter::trivial(4);
}

DirichletCharacter chi_quadratic(long t) {
    if (t < 1) throw Error("chi_quadratic needs t >= 1");
    long s = squarefree_part(t);
    return DirichletCharacter::kronecker(fundamental_discriminant_of(s));
}

} // namespace qmf
