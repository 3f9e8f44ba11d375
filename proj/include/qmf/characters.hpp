#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmf/arith.hpp"
#include "qmf/exact_ring.hpp"

namespace qmf {

/// Dirichlet character mod r with exact root-of-unity values.
///
/// Stored as one component per prime power q exactly dividing r; each
/// component records a generator set of (Z/qZ)^x together with the image
/// exponents of those generators. Values at units are tracked as reduced
/// fractions of a full turn, so products, induction and prime-power
/// decomposition are exact.
class DirichletCharacter {
public:
    /// chi_{0,d}: 1 on gcd(n,d)=1, else 0.
    static DirichletCharacter trivial(long d);
    /// n -> kronecker_symbol(D, n), modulus |D| (modulus 1 when D = 1).
    static DirichletCharacter kronecker(long D);
    /// Character mod an odd prime power (or 4) sending the canonical
    /// generator of the unit group to e^(2 pi i k/ord(g)). Test/CLI-free
    /// constructor for characters of higher order.
    static DirichletCharacter prime_power(long q, long image_exponent);

    long modulus() const { return modulus_; }
    /// Order as a group element (1 for the trivial character).
    long order() const { return order_; }
    /// 0 when the character is even, 1 when odd.
    int parity() const { return parity_; }

    /// Exact value at any integer; rational when order() <= 2, otherwise a
    /// CyclotomicElement of order order(). Value at 0 is 1 iff modulus is 1.
    RingValue eval(long n) const;

    /// Value as a fraction of a full turn; nullopt when the value is 0.
    std::optional<std::pair<long, long>> angle(long n) const;

    friend DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b);
    /// Character mod M (modulus() | M) agreeing with this one on units.
    DirichletCharacter induced(long M) const;
    /// Prime-power components (q_i, character mod q_i), q_i ascending by prime.
    std::vector<std::pair<long, DirichletCharacter>> decompose() const;
    /// Product of components at primes dividing d, for a unitary divisor d.
    DirichletCharacter component_at(long d) const;

    /// The CLI grammar string this character was built from
    /// ("trivial:<d>", "kronecker:<D>", "prod(...)", "induce(...,M)").
    const std::string& spec() const { return spec_; }
    void set_spec(std::string s) { spec_ = std::move(s); }

    /// Pointwise agreement of values on 0..bound (representation-independent).
    static bool same_values(const DirichletCharacter& a, const DirichletCharacter& b, long bound);

private:
    struct Generator {
        long g;
        long order;
    };
    struct Component {
        long prime = 0;
        long q = 1; // prime power
        std::vector<Generator> gens;
        std::vector<long> exps; // image of gens[i] is e^(2 pi i exps[i]/gens[i].order)
        std::unordered_map<long, std::vector<long>> dlog; // unit -> exponent tuple

        std::pair<long, long> angle_at(long unit) const;
        void build_dlog();
    };

    DirichletCharacter() = default;
    static DirichletCharacter from_components(long modulus, std::vector<Component> comps,
                                              std::string spec);
    static Component make_component(long q, const std::vector<long>& exps);
    static std::vector<Generator> unit_group_generators(long q);
    void finalize(); // order_, parity_

    long modulus_ = 1;
    std::vector<Component> components_;
    long order_ = 1;
    int parity_ = 0;
    std::string spec_ = "trivial:1";
};

/// Parses the character grammar: trivial:<d> | kronecker:<D> |
/// prod(<spec>,<spec>,...) | induce(<spec>,<M>).
DirichletCharacter parse_character(const std::string& text);

/// chi_{-4}^e collapsed to a concrete character: trivial mod 1 for e = 0,
/// the odd character mod 4 for odd e, the trivial character mod 4 otherwise.
DirichletCharacter chi_minus4_power(long e);

/// chi_t for positive t: the Kronecker character of the fundamental
/// discriminant of the squarefree part of t.
DirichletCharacter chi_quadratic(long t);

} // namespace qmf
