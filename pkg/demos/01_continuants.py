"""Euler continuants as sums over cotwinned subsets, and what they count.

Run: python demos/01_continuants.py
"""

from eulertwist.continuants import (cotwinned_subsets, euler_alt, euler_poly,
                                    fibonacci_number, fibonacci_value)

print("E_N at q = -1 for small N:")
for N in range(1, 6):
    print(f"  E_{N} = {euler_alt(N).to_text()}")

N = 5
print(f"\nThe monomials of E_{N} are indexed by cotwinned subsets of [1, {N}]:")
for c in cotwinned_subsets(N):
    print(f"  members {c.members!s:<18} missing twins {c.missing_twins}")

print("\nMonomial counts are Fibonacci numbers:")
print("  " + " ".join(str(len(euler_poly(N))) for N in range(0, 13)))
print("  " + " ".join(str(fibonacci_number(N)) for N in range(0, 13)))

print("\nSetting every variable to x gives a Chebyshev-type polynomial; at x = 1:")
print("  " + " ".join(str(fibonacci_value(N, 1)) for N in range(0, 13)), "(period 6)")
