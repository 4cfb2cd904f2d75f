#include "geotrans/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace geotrans {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw InvalidInput("image table is not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 0) throw InvalidInput("negative degree");
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            int b = cyc[(i + 1) % cyc.size()];
            if (a < 0 || a >= degree || b < 0 || b >= degree)
                throw InvalidInput("cycle point out of range");
            p.img_[a] = b;
        }
    }
    // re-validate through the checking constructor
    return Permutation(p.img_);
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) p.img_[img_[i]] = i;
    return p;
}

std::uint64_t Permutation::order() const {
    std::uint64_t ord = 1;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::parity() const {
    int par = 0;
    for (const auto& cyc : cycles()) par ^= (cyc.size() - 1) & 1;
    return par;
}

std::string Permutation::to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InvalidInput("compose: degree mismatch");
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = b[a[i]];
    return Permutation(std::move(img), Permutation::Unchecked{});
}

void compose_into(const Permutation& a, const Permutation& b, Permutation& out) {
    if (a.degree() != b.degree()) throw InvalidInput("compose: degree mismatch");
    out.img_.resize(a.degree());
    const int* pa = a.images().data();
    const int* pb = b.images().data();
    int* po = out.img_.data();
    for (int i = 0; i < a.degree(); ++i) po[i] = pb[pa[i]];
}

Permutation conjugate(const Permutation& a, const Permutation& c) {
    return compose(compose(c.inverse(), a), c);
}

bool commute(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InvalidInput("commute: degree mismatch");
    for (int i = 0; i < a.degree(); ++i)
        if (b[a[i]] != a[b[i]]) return false;
    return true;
}

std::uint64_t hash_images(const std::vector<int>& images) {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : images) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace geotrans
