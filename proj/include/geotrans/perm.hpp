#ifndef GEOTRANS_PERM_HPP
#define GEOTRANS_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "geotrans/errors.hpp"

namespace geotrans {

// Permutation of {0, ..., n-1} stored as an image table: img[i] is the image
// of i. Products apply the left factor first, so (p * q) maps i to q[p[i]].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // validates

    static Permutation identity(int degree);
    // cycles use 0-indexed points; points not mentioned are fixed
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    std::uint64_t order() const;
    std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, each starting at its least point
    int parity() const;                            // 0 even, 1 odd
    std::string to_cycle_string() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : img_(std::move(images)) {}

    friend Permutation compose(const Permutation&, const Permutation&);
    friend void compose_into(const Permutation&, const Permutation&, Permutation&);

    std::vector<int> img_;
};

// apply a, then b
Permutation compose(const Permutation& a, const Permutation& b);

// out = compose(a, b) without reallocating when out already has the degree;
// out must not alias a or b
void compose_into(const Permutation& a, const Permutation& b, Permutation& out);

// c^-1 * a * c, the conjugate of a by c
Permutation conjugate(const Permutation& a, const Permutation& c);

bool commute(const Permutation& a, const Permutation& b);

std::uint64_t hash_images(const std::vector<int>& images);

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        return static_cast<std::size_t>(hash_images(p.images()));
    }
};

}  // namespace geotrans

#endif
