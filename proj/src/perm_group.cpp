#include "geotrans/perm_group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_map>

#include "geotrans/errors.hpp"

namespace geotrans {

namespace {

std::string pack_images(const std::vector<int>& img) {
    std::string out;
    if (img.size() <= 0xffff) {
        out.resize(img.size() * 2);
        for (std::size_t i = 0; i < img.size(); ++i) {
            out[2 * i] = static_cast<char>(img[i] & 0xff);
            out[2 * i + 1] = static_cast<char>((img[i] >> 8) & 0xff);
        }
    } else {
        out.resize(img.size() * 4);
        for (std::size_t i = 0; i < img.size(); ++i)
            std::memcpy(&out[4 * i], &img[i], 4);
    }
    return out;
}

std::vector<int> unpack_images(const std::string& key, int degree) {
    std::vector<int> img(degree);
    if (static_cast<std::size_t>(degree) <= 0xffff) {
        for (int i = 0; i < degree; ++i)
            img[i] = static_cast<unsigned char>(key[2 * i]) |
                     (static_cast<unsigned char>(key[2 * i + 1]) << 8);
    } else {
        for (int i = 0; i < degree; ++i) std::memcpy(&img[i], &key[4 * i], 4);
    }
    return img;
}

// an element has prime order exactly when its nontrivial cycles all share
// one prime length; mixed lengths let the scan bail out long before the
// whole domain is walked
bool has_prime_order(const std::vector<int>& img, std::vector<char>& seen) {
    seen.assign(img.size(), 0);
    std::uint64_t common = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i] || img[i] == static_cast<int>(i)) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) {
            seen[j] = 1;
            ++len;
        }
        if (common == 0) {
            if (!is_prime_u64(len)) return false;
            common = len;
        } else if (len != common) {
            return false;
        }
    }
    return common != 0;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens) {
    return from_generators_with_base_hint(std::move(gens), {});
}

PermGroup PermGroup::from_generators_with_base_hint(std::vector<Permutation> gens,
                                                    const std::vector<int>& hint) {
    if (gens.empty()) throw InvalidInput("generator list must be nonempty");
    PermGroup g;
    g.degree_ = gens[0].degree();
    for (const auto& p : gens)
        if (p.degree() != g.degree_) throw InvalidInput("generators have mixed degrees");
    for (auto& p : gens)
        if (!p.is_identity()) g.gens_.push_back(std::move(p));
    for (int h : hint) {
        if (h < 0 || h >= g.degree_) throw InvalidInput("base hint point out of range");
        g.hint_.push_back(h);
    }
    g.build();
    return g;
}

PermGroup PermGroup::trivial(int degree) {
    if (degree <= 0) throw InvalidInput("degree must be positive");
    PermGroup g;
    g.degree_ = degree;
    g.order_ = 1;
    return g;
}

int PermGroup::pick_new_base_point(const Permutation& moved_by) const {
    for (int h : hint_)
        if (moved_by[h] != h) return h;
    for (int i = 0; i < degree_; ++i)
        if (moved_by[i] != i) return i;
    throw InvalidInput("identity has no base point");
}

std::vector<const Permutation*> PermGroup::gens_from_level(int i) const {
    std::vector<const Permutation*> out;
    for (std::size_t j = static_cast<std::size_t>(i); j < chain_.size(); ++j)
        for (const auto& g : chain_[j].gens) out.push_back(&g);
    return out;
}

void PermGroup::rebuild_level(int i) {
    Level& L = chain_[i];
    auto gens = gens_from_level(i);
    L.orb.assign(1, L.point);
    L.pos.assign(degree_, -1);
    L.pos[L.point] = 0;
    L.trans.assign(1, Permutation::identity(degree_));
    L.trans_inv.assign(1, Permutation::identity(degree_));
    for (std::size_t k = 0; k < L.orb.size(); ++k) {
        for (const Permutation* s : gens) {
            int q = (*s)[L.orb[k]];
            if (L.pos[q] < 0) {
                L.pos[q] = static_cast<int>(L.orb.size());
                L.orb.push_back(q);
                L.trans.push_back(compose(L.trans[k], *s));
                L.trans_inv.push_back(L.trans.back().inverse());
            }
        }
    }
}

bool PermGroup::strip_from(const Permutation& p, int start, Permutation& residue,
                           int& level) const {
    residue = p;
    std::size_t i = static_cast<std::size_t>(start);
    for (; i < chain_.size(); ++i) {
        const Level& L = chain_[i];
        int im = residue[L.point];
        if (im == L.point) continue;
        int k = L.pos[im];
        if (k < 0) break;
        residue = compose(residue, L.trans_inv[k]);
    }
    level = static_cast<int>(i);
    return i == chain_.size() && residue.is_identity();
}

bool PermGroup::place(const Permutation& p) {
    Permutation r;
    int lvl = 0;
    if (strip_from(p, 0, r, lvl)) return false;
    if (r.is_identity()) return false;
    if (lvl == static_cast<int>(chain_.size())) {
        Level L;
        L.point = pick_new_base_point(r);
        chain_.push_back(std::move(L));
    }
    chain_[lvl].gens.push_back(r);
    // the new generator fixes the base points of every level above lvl, so
    // it participates in all of those orbits as well
    for (int i = lvl; i >= 0; --i) rebuild_level(i);
    return true;
}

bool PermGroup::close_once() {
    for (std::size_t i = 0; i < chain_.size(); ++i) {
        const Level& L = chain_[i];
        auto gens = gens_from_level(static_cast<int>(i));
        for (std::size_t k = 0; k < L.orb.size(); ++k) {
            for (const Permutation* s : gens) {
                int q = (*s)[L.orb[k]];
                Permutation sch = compose(compose(L.trans[k], *s), L.trans_inv[L.pos[q]]);
                if (sch.is_identity()) continue;
                Permutation r;
                int lvl = 0;
                if (strip_from(sch, static_cast<int>(i) + 1, r, lvl)) continue;
                if (r.is_identity()) continue;
                if (lvl == static_cast<int>(chain_.size())) {
                    Level M;
                    M.point = pick_new_base_point(r);
                    chain_.push_back(std::move(M));
                }
                chain_[lvl].gens.push_back(r);
                for (int j = lvl; j >= 0; --j) rebuild_level(j);
                return true;
            }
        }
    }
    return false;
}

void PermGroup::build() {
    chain_.clear();
    order_ = 1;
    if (gens_.empty()) return;

    // hint points claim the leading levels in order, whether or not their
    // orbits end up nontrivial; stabilizer extraction relies on this layout
    for (int h : hint_) {
        Level L;
        L.point = h;
        chain_.push_back(std::move(L));
    }
    if (chain_.empty()) {
        Level L;
        L.point = pick_new_base_point(gens_[0]);
        chain_.push_back(std::move(L));
    }
    for (int i = static_cast<int>(chain_.size()) - 1; i >= 0; --i) rebuild_level(i);
    for (const auto& g : gens_) place(g);
    while (close_once()) {
    }
    recompute_order();
}

void PermGroup::recompute_order() {
    order_ = 1;
    for (const auto& L : chain_) order_ *= static_cast<unsigned long>(L.orb.size());
}

std::vector<Permutation> PermGroup::strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& L : chain_)
        for (const auto& g : L.gens) out.push_back(g);
    return out;
}

std::vector<int> PermGroup::base() const {
    std::vector<int> out;
    for (const auto& L : chain_) out.push_back(L.point);
    return out;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) throw InvalidInput("membership test: degree mismatch");
    if (p.is_identity()) return true;
    Permutation r;
    int lvl = 0;
    return strip_from(p, 0, r, lvl);
}

Permutation PermGroup::sift(const Permutation& p) const {
    if (p.degree() != degree_) throw InvalidInput("sift: degree mismatch");
    Permutation r;
    int lvl = 0;
    strip_from(p, 0, r, lvl);
    return r;
}

std::vector<int> PermGroup::orbit(int point) const {
    if (point < 0 || point >= degree_) throw InvalidInput("orbit point out of range");
    std::vector<int> orb{point};
    std::vector<char> seen(degree_, 0);
    seen[point] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k)
        for (const auto& g : gens_) {
            int q = g[orb[k]];
            if (!seen[q]) {
                seen[q] = 1;
                orb.push_back(q);
            }
        }
    return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree_, 0);
    for (int i = 0; i < degree_; ++i) {
        if (seen[i]) continue;
        auto orb = orbit(i);
        for (int v : orb) seen[v] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

bool PermGroup::is_transitive() const {
    return static_cast<int>(orbit(0).size()) == degree_;
}

bool PermGroup::is_regular() const {
    return is_transitive() && order_ == static_cast<unsigned long>(degree_);
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!commute(gens_[i], gens_[j])) return false;
    return true;
}

bool PermGroup::is_elementary_abelian() const {
    if (order_ == 1) return false;
    if (!is_abelian()) return false;
    std::uint64_t p = gens_[0].order();
    if (!is_prime_u64(p)) return false;
    for (const auto& g : gens_)
        if (g.order() != p) return false;
    return true;
}

bool PermGroup::is_simple(const Caps& caps) const {
    if (order_ == 1) return false;
    if (mpz_probab_prime_p(order_.get_mpz_t(), 40) > 0) return true;
    if (is_abelian()) return false;
    auto mns = minimal_normal_subgroups(caps);
    return mns.size() == 1 && mns[0].order() == order_;
}

PermGroup PermGroup::point_stabilizer(int point) const {
    if (point < 0 || point >= degree_) throw InvalidInput("stabilizer point out of range");
    if (gens_.empty()) return trivial(degree_);
    PermGroup re = from_generators_with_base_hint(gens_, {point});
    std::vector<Permutation> stab;
    for (std::size_t i = 1; i < re.chain_.size(); ++i)
        for (const auto& g : re.chain_[i].gens) stab.push_back(g);
    if (stab.empty()) return trivial(degree_);
    return from_generators(std::move(stab));
}

PermGroup PermGroup::setwise_stabilizer(const std::vector<int>& set) const {
    std::vector<int> pts = set;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (int p : pts)
        if (p < 0 || p >= degree_) throw InvalidInput("set point out of range");
    if (gens_.empty()) return trivial(degree_);
    if (pts.empty() || static_cast<int>(pts.size()) == degree_) return *this;

    PermGroup re = from_generators_with_base_hint(gens_, pts);
    std::vector<char> in_set(degree_, 0);
    for (int p : pts) in_set[p] = 1;

    // generators below the hinted prefix fix every set point, so they belong
    // to the stabilizer outright and seed the search
    std::vector<Permutation> found;
    for (std::size_t i = pts.size(); i < re.chain_.size(); ++i)
        for (const auto& g : re.chain_[i].gens) found.push_back(g);
    PermGroup current = found.empty() ? trivial(degree_) : from_generators(found);

    // walk the transversal products of the hinted levels depth first; the
    // final image of set point d is decided at depth d, so branches that
    // send it outside the set are cut immediately
    int depth = static_cast<int>(pts.size());
    std::vector<Permutation> partial(depth + 1, Permutation::identity(degree_));
    std::vector<int> choice(depth, 0);
    int d = 0;
    while (d >= 0) {
        if (d == depth) {
            const Permutation& q = partial[d];
            if (!q.is_identity() && !current.contains(q)) {
                found.push_back(q);
                current = from_generators(found);
            }
            --d;
            continue;
        }
        const Level& L = re.chain_[d];
        bool descended = false;
        while (choice[d] < static_cast<int>(L.orb.size())) {
            int k = choice[d]++;
            if (!in_set[partial[d][L.orb[k]]]) continue;
            compose_into(L.trans[k], partial[d], partial[d + 1]);
            descended = true;
            ++d;
            if (d < depth) choice[d] = 0;
            break;
        }
        if (!descended) {
            choice[d] = 0;
            --d;
        }
    }
    return current;
}

PermGroup PermGroup::normal_closure(const std::vector<Permutation>& elements) const {
    std::vector<Permutation> cl;
    for (const auto& e : elements) {
        if (!contains(e)) throw InvalidInput("normal closure: element outside the group");
        if (!e.is_identity()) cl.push_back(e);
    }
    if (cl.empty()) return trivial(degree_);
    PermGroup k = from_generators(cl);
    for (std::size_t idx = 0; idx < cl.size(); ++idx) {
        for (const auto& g : gens_) {
            Permutation c = conjugate(cl[idx], g);
            if (!k.contains(c)) {
                cl.push_back(std::move(c));
                k = from_generators(cl);
            }
        }
    }
    return k;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn) const {
    if (chain_.empty()) {
        fn(Permutation::identity(degree_));
        return;
    }
    int depth = static_cast<int>(chain_.size());
    std::vector<Permutation> partial(depth + 1, Permutation::identity(degree_));
    std::vector<int> choice(depth, 0);
    int d = 0;
    while (d >= 0) {
        if (d == depth) {
            fn(partial[d]);
            --d;
            continue;
        }
        const Level& L = chain_[d];
        if (choice[d] < static_cast<int>(L.orb.size())) {
            int k = choice[d]++;
            compose_into(L.trans[k], partial[d], partial[d + 1]);
            ++d;
            if (d < depth) choice[d] = 0;
        } else {
            choice[d] = 0;
            --d;
        }
    }
}

std::vector<Permutation> PermGroup::elements(long long limit) const {
    if (order_ > static_cast<unsigned long>(limit))
        throw CapExceeded("group too large to list its elements");
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order_.get_ui()));
    for_each_element([&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<PermGroup> PermGroup::minimal_normal_subgroups(const Caps& caps) const {
    if (order_ > static_cast<unsigned long>(caps.element_enumeration_cap))
        throw CapExceeded("group order exceeds the element enumeration cap");
    if (order_ == 1) return {};

    // stream every element once, keeping a packed copy of each prime-order
    // element; those are the only candidates that matter, and for groups in
    // range they are a small fraction of the whole
    std::vector<std::string> packed;
    std::unordered_map<std::string, int> index;
    {
        std::vector<char> scratch;
        for_each_element([&](const Permutation& p) {
            if (!has_prime_order(p.images(), scratch)) return;
            std::string key = pack_images(p.images());
            if (index.emplace(key, static_cast<int>(packed.size())).second)
                packed.push_back(std::move(key));
        });
    }

    // group the candidates into conjugacy classes by BFS under conjugation
    std::vector<Permutation> gen_invs;
    gen_invs.reserve(gens_.size());
    for (const auto& g : gens_) gen_invs.push_back(g.inverse());
    std::vector<char> visited(packed.size(), 0);
    std::vector<Permutation> reps;
    Permutation tmp, conj;
    for (std::size_t i = 0; i < packed.size(); ++i) {
        if (visited[i]) continue;
        visited[i] = 1;
        reps.emplace_back(unpack_images(packed[i], degree_));
        std::vector<int> queue{static_cast<int>(i)};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Permutation x(unpack_images(packed[queue[head]], degree_));
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                compose_into(gen_invs[gi], x, tmp);
                compose_into(tmp, gens_[gi], conj);
                auto it = index.find(pack_images(conj.images()));
                if (it != index.end() && !visited[it->second]) {
                    visited[it->second] = 1;
                    queue.push_back(it->second);
                }
            }
        }
    }

    // conjugate elements share a normal closure, so class representatives
    // cover every minimal normal subgroup; closures that properly contain a
    // smaller closure are discarded
    std::vector<PermGroup> cands;
    for (const auto& rep : reps) {
        PermGroup n = normal_closure({rep});
        bool seen = false;
        for (const auto& c : cands) {
            if (c.order() != n.order()) continue;
            bool sub = true;
            for (const auto& g : n.generators())
                if (!c.contains(g)) {
                    sub = false;
                    break;
                }
            if (sub) {
                seen = true;
                break;
            }
        }
        if (!seen) cands.push_back(std::move(n));
    }
    std::vector<PermGroup> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < cands.size() && minimal; ++j) {
            if (i == j || cands[j].order() >= cands[i].order()) continue;
            bool sub = true;
            for (const auto& g : cands[j].generators())
                if (!cands[i].contains(g)) {
                    sub = false;
                    break;
                }
            if (sub) minimal = false;
        }
        if (minimal) out.push_back(cands[i]);
    }
    std::sort(out.begin(), out.end(),
              [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    return out;
}

PermGroup PermGroup::socle(const Caps& caps) const {
    auto mns = minimal_normal_subgroups(caps);
    std::vector<Permutation> gens;
    for (const auto& n : mns)
        for (const auto& g : n.generators()) gens.push_back(g);
    if (gens.empty()) return trivial(degree_);
    return from_generators(std::move(gens));
}

BlockSystem PermGroup::blocks() const {
    if (!is_transitive()) throw NotTransitive("block systems need a transitive group");
    BlockSystem best;
    best.primitive = true;
    best.block_size = 0;
    if (degree_ <= 2) return best;

    std::vector<int> parent(degree_);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    // the finest congruence identifying 0 with delta, for each delta; keep
    // the one with the smallest block, preferring the earliest delta on ties
    int best_size = degree_;
    std::vector<int> best_root;
    for (int delta = 1; delta < degree_; ++delta) {
        std::iota(parent.begin(), parent.end(), 0);
        parent[delta] = 0;
        std::vector<std::pair<int, int>> queue{{0, delta}};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [a, b] = queue[head];
            for (const auto& g : gens_) {
                int ra = find(g[a]);
                int rb = find(g[b]);
                if (ra != rb) {
                    parent[rb] = ra;
                    queue.emplace_back(ra, rb);
                }
            }
        }
        int size = 0;
        int r0 = find(0);
        for (int i = 0; i < degree_; ++i)
            if (find(i) == r0) ++size;
        if (size < degree_ && size < best_size) {
            best_size = size;
            best_root.resize(degree_);
            for (int i = 0; i < degree_; ++i) best_root[i] = find(i);
        }
    }
    if (best_root.empty()) return best;

    best.primitive = false;
    best.block_size = best_size;
    std::vector<std::vector<int>> by_root(degree_);
    for (int i = 0; i < degree_; ++i) by_root[best_root[i]].push_back(i);
    for (auto& blk : by_root)
        if (!blk.empty()) best.blocks.push_back(std::move(blk));
    std::sort(best.blocks.begin(), best.blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return best;
}

std::vector<std::vector<int>> orbit_vectors(
    const std::vector<Permutation>& gens, std::vector<int> seed,
    const std::function<std::vector<int>(const Permutation&, const std::vector<int>&)>& apply,
    long long max_items) {
    std::vector<std::vector<int>> orb;
    // buckets keyed by hash hold exact copies, so collisions stay harmless
    std::unordered_map<std::uint64_t, std::vector<std::vector<int>>> buckets;
    auto insert = [&](std::vector<int> v) {
        auto& bucket = buckets[hash_images(v)];
        for (const auto& u : bucket)
            if (u == v) return;
        bucket.push_back(v);
        orb.push_back(std::move(v));
    };
    insert(std::move(seed));
    for (std::size_t head = 0; head < orb.size(); ++head) {
        std::vector<int> cur = orb[head];  // orb may reallocate while we append
        for (const auto& g : gens) {
            if (max_items >= 0 && static_cast<long long>(orb.size()) > max_items)
                throw CapExceeded("orbit exceeds the configured cap");
            insert(apply(g, cur));
        }
    }
    return orb;
}

std::vector<int> apply_tuple(const Permutation& g, const std::vector<int>& t) {
    std::vector<int> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = g[t[i]];
    return out;
}

std::vector<int> apply_set(const Permutation& g, const std::vector<int>& s) {
    std::vector<int> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = g[s[i]];
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace geotrans
