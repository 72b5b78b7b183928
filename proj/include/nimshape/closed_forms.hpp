#pragma once

#include <span>
#include <vector>

#include "nimshape/hyperrect.hpp"
#include "nimshape/partition.hpp"

namespace nimshape {

// Rectangle ⟨c^r⟩.
struct RectSpec {
	int r = 1;  // rows
	int c = 1;  // columns
};

Partition rectangle(RectSpec shape);

// mex({0..k-1} ∪ {s+k : s ∈ S}); equals mex(S) + k. Requires k >= 1.
unsigned shifted_mex(std::span<const unsigned> set, unsigned k);

// ((r-1) ⊕ (c-1)) + 1
unsigned rect_grundy(RectSpec shape);

// 0 when some side is 0, else 1 + ⊕(k_i - 1)
unsigned hyperrect_grundy(const Hyperrect& h) noexcept;

// XOR of hyperrect_grundy over a nonempty list.
unsigned rnim_sum_grundy(std::span<const Hyperrect> components);

// Value of ⟨c1, c2⟩, c1 >= c2 >= 1: c1 - 1 when c1 = c2 is even, c1 + 1 otherwise.
unsigned two_row_grundy(int c1, int c2);

// binom(c+r-2, r-1) is odd, tested as "bits of r-1 are a subset of bits of c+r-2".
bool rect_is_heavy(RectSpec shape);

// λ = ⟨1⟩, or ⟨r,r,r-1,...,2⟩ <= λ <= ⟨r^r⟩ for r = number of parts >= 2.
bool sg1_member(const Partition& p) noexcept;

enum class HeavyFamily { hook, staircase, shallow_staircase, chopped_rect };

// hook(c, r)                ⟨c, 1^{r-1}⟩
// staircase(c, r), c >= r   ⟨c, c-1, ..., c-r+1⟩
// shallow_staircase(i,s,k)  ⟨i+(k-1)s, ..., i+s, i⟩
// chopped_rect(a, b)        lower corner ⟨a+1, a, ..., a-b+1⟩ of the interval below the
//                           heavy rectangle ⟨(a+1)^{b+1}⟩; needs 0 <= b <= a
Partition heavy_family_witness(HeavyFamily kind, std::span<const int> params);

Partition hook(int c, int r);
Partition staircase(int c, int r);
Partition shallow_staircase(int i, int s, int k);
Partition chopped_rect_lower(int a, int b);

}  // namespace nimshape
