#pragma once

// Permutation algebra over {1..n} with cycle-notation input and output.
//
// Permutations are stored as dense image arrays so that application is O(1);
// cycle notation exists only at the I/O boundary. Values are immutable after
// construction and safe to share between threads.

#include <string>
#include <vector>

#include "h2/error.hpp"

namespace h2 {

class Permutation {
public:
    Permutation() = default;            // degree-0 placeholder
    explicit Permutation(int degree);   // identity on {1..degree}

    // images[i-1] is the image of point i; must be a bijection of {1..n}.
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int point) const { return img_[point - 1]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

// Parses a whitespace-tolerant sequence of parenthesized cycles, evaluated
// right-to-left (non-disjoint cycles are legal). "" and "()" denote the
// identity. Points not mentioned are fixed.
Permutation parse_cycles(const std::string& text, int degree);

// compose(p, q)(x) = p(q(x)): the right factor is applied first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// g p g^-1
Permutation conjugate(const Permutation& p, const Permutation& g);
Permutation power(const Permutation& p, long long k);

// Nontrivial disjoint cycles, each starting at its smallest element and
// ordered by smallest element.
std::vector<std::vector<int>> disjoint_cycles(const Permutation& p);

// Lengths (>= 2) of the nontrivial cycles, sorted descending.
std::vector<int> cycle_type(const Permutation& p);

int sign(const Permutation& p);   // +1 or -1

// Disjoint-cycle notation parseable by parse_cycles; identity prints as "()".
std::string format_cycles(const Permutation& p);

} // namespace h2
