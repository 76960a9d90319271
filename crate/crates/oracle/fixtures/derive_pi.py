#!/usr/bin/env python3
"""Derives fixtures/pi_30.txt.

Machin's formula pi = 16 atan(1/5) - 4 atan(1/239) evaluated in scaled
integer arithmetic with 20 guard digits, then truncated to 30 decimals.
Standard library only.
"""

DIGITS = 30
GUARD = 20


def atan_inv(x, scale):
    # atan(1/x) * scale
    total = term = scale // x
    x2 = x * x
    n = 1
    sign = -1
    while term:
        term //= x2
        total += sign * (term // (2 * n + 1))
        sign = -sign
        n += 1
    return total


def main():
    scale = 10 ** (DIGITS + GUARD)
    pi = 16 * atan_inv(5, scale) - 4 * atan_inv(239, scale)
    pi //= 10 ** GUARD
    s = str(pi)
    print(s[0] + "." + s[1:])


if __name__ == "__main__":
    main()
