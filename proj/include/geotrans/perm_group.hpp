#ifndef GEOTRANS_PERM_GROUP_HPP
#define GEOTRANS_PERM_GROUP_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "geotrans/perm.hpp"

namespace geotrans {

// Resource caps shared across the library. Overridable from the CLI via
// --caps and from the GEOTRANS_CAPS environment variable.
struct Caps {
    // groups whose order exceeds this are never enumerated element by element
    long long element_enumeration_cap = 12'000'000;
    // the automorphism search refuses graphs with more vertices than this
    long long aut_vertex_cap = 2000;
    // tuple enumerations refuse to materialize more ints than this
    long long tuple_int_cap = 50'000'000;
};

struct BlockSystem {
    bool primitive = false;                // only trivial systems exist
    int block_size = 0;                    // 0 when primitive
    std::vector<std::vector<int>> blocks;  // sorted by least point; empty when primitive
};

// Permutation group with a stabilizer chain built by a deterministic
// Schreier-Sims pass: base points are preferred from the hint list, then the
// smallest non-fixed point, and orbits are scanned in BFS order. Exact order
// arithmetic uses GMP integers.
class PermGroup {
public:
    PermGroup() = default;

    static PermGroup from_generators(std::vector<Permutation> gens);
    static PermGroup from_generators_with_base_hint(std::vector<Permutation> gens,
                                                    const std::vector<int>& hint);
    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    const mpz_class& order() const { return order_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    std::vector<Permutation> strong_generators() const;
    std::vector<int> base() const;

    bool contains(const Permutation& p) const;
    Permutation sift(const Permutation& p) const;  // residue after stripping

    std::vector<int> orbit(int point) const;       // BFS discovery order
    std::vector<std::vector<int>> orbits() const;  // ordered by least point

    bool is_transitive() const;
    bool is_regular() const;
    bool is_abelian() const;
    bool is_elementary_abelian() const;
    bool is_simple(const Caps& caps = {}) const;

    PermGroup point_stabilizer(int point) const;
    PermGroup setwise_stabilizer(const std::vector<int>& set) const;
    PermGroup normal_closure(const std::vector<Permutation>& elements) const;

    // All minimal normal subgroups, each as its own group. Works by taking
    // normal closures of conjugacy class representatives of prime-order
    // elements (every minimal normal subgroup is the closure of each of its
    // prime-order elements) and keeping the minimal closures.
    std::vector<PermGroup> minimal_normal_subgroups(const Caps& caps = {}) const;
    PermGroup socle(const Caps& caps = {}) const;

    BlockSystem blocks() const;  // requires a transitive group

    // Visits every element exactly once, in the fixed mixed-radix order of
    // the stabilizer chain transversals.
    void for_each_element(const std::function<void(const Permutation&)>& fn) const;
    std::vector<Permutation> elements(long long limit) const;

private:
    struct Level {
        int point = -1;
        std::vector<Permutation> gens;
        std::vector<int> orb;    // fundamental orbit in BFS order
        std::vector<int> pos;    // point -> index into orb, or -1
        std::vector<Permutation> trans;      // trans[k] maps point to orb[k]
        std::vector<Permutation> trans_inv;  // inverse of trans[k]
    };

    void build();
    // sifts p and, unless it vanishes, installs the residue at the level it
    // stuck at, refreshing every orbit the new generator can touch
    bool place(const Permutation& p);
    void rebuild_level(int i);
    // generators installed at this level or deeper; all of them fix the base
    // points of the levels above, so together they generate the level's group
    std::vector<const Permutation*> gens_from_level(int i) const;
    // strips p through levels start, start+1, ...; returns true when the
    // residue is the identity, else reports the residue and the level it
    // stuck at (== chain size if it ran off the end)
    bool strip_from(const Permutation& p, int start, Permutation& residue, int& level) const;
    // scans for a Schreier generator that fails to sift; installs its residue
    // and reports whether anything changed
    bool close_once();
    int pick_new_base_point(const Permutation& moved_by) const;
    void recompute_order();

    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<int> hint_;
    std::vector<Level> chain_;
    mpz_class order_ = 1;

    friend class SetStabSearch;
};

// BFS orbit of an integer-vector object under transport by the given
// generators. apply(g, v) must return the transported object in canonical
// form. Throws CapExceeded if the orbit would hold more than max_items
// vectors (when max_items >= 0).
std::vector<std::vector<int>> orbit_vectors(
    const std::vector<Permutation>& gens, std::vector<int> seed,
    const std::function<std::vector<int>(const Permutation&, const std::vector<int>&)>& apply,
    long long max_items = -1);

std::vector<int> apply_tuple(const Permutation& g, const std::vector<int>& t);  // pointwise
std::vector<int> apply_set(const Permutation& g, const std::vector<int>& s);    // pointwise, then sorted

bool is_prime_u64(std::uint64_t n);

}  // namespace geotrans

#endif
