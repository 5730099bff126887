#pragma once

// The SL(2,Z) action on origamis. T and S act by the shear formulas
// T((h,v)) = (h, v h^-1) and S((h,v)) = (h v^-1, v); P and R act through
// their T/S words, certified by integer 2x2 matrices. Words follow the
// left-action convention: the rightmost letter acts first and
// matrix_of([a,b,c]) = M_a * M_b * M_c.

#include <cstdint>
#include <string>
#include <vector>

#include "h2/origami.hpp"

namespace h2 {

enum class Gen : uint8_t { T, Tinv, S, Sinv };

using GroupWord = std::vector<Gen>;

Origami apply_T(const Origami& o);
Origami apply_Tinv(const Origami& o);
Origami apply_S(const Origami& o);
Origami apply_Sinv(const Origami& o);
Origami apply_gen(Gen g, const Origami& o);

// Letters applied right-to-left; the empty word is the identity.
Origami apply_word(const GroupWord& w, const Origami& o);

// R = T^-1 S T^-1 and P = T S^-1; both identities certified by matrix_of.
GroupWord word_P();
GroupWord word_R();
GroupWord inverse_word(const GroupWord& w);

struct IntMatrix2 {
    long long a = 1, b = 0, c = 0, d = 1;   // row-major [[a,b],[c,d]]
    long long det() const { return a * d - b * c; }
    friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 matrix_of(Gen g);
IntMatrix2 matrix_of(const GroupWord& w);

// CLI word literal: whitespace-separated tokens T, S, P, R with optional
// integer exponents ("T^-3 S T"); the rightmost token applies first.
GroupWord parse_word(const std::string& text);
std::string format_word(const GroupWord& w);

} // namespace h2
