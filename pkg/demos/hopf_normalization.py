"""Why links need the box-product normalization.

Dividing the Hopf link's W by the unknot's W does not stay in the integral
ring, but the normalized invariant does, and the quotient by W(U) is the
polynomial s + z*a.
"""

from skeinlab import (
    BraidWord,
    ColoredLink,
    divide,
    eigenvalue_ratio,
    full_W,
    naive_P_link,
    normalized_P_link,
    unknot_value,
)

HOPF = BraidWord(2, (1, 1))
FUND = ([1], [])


def main():
    cl = ColoredLink(HOPF, [FUND, FUND])
    w = full_W(cl)
    print("W(Hopf)          ", w)

    naive = naive_P_link(cl)
    print("naive quotient   ", naive.value, "|", naive.finding)

    norm = normalized_P_link(cl, 1)
    print("normalized       ", norm.value, "| even:", norm.even)

    print("W / W(U)         ", divide(w, unknot_value([1])))

    ratio = eigenvalue_ratio(cl, 1)
    print("eigenvalue ratio ", ratio.value, "| Laurent:", ratio.laurent)


if __name__ == "__main__":
    main()
