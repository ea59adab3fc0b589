"""m-sequences by hand: why x is H-nilpotent in one action and not another.

An m-sequence iterates a_{n+1} = (h_n.a_n) b_n (h'_n.a_n).  An element is
H-m-nilpotent when every such sequence eventually hits zero; the set of
those elements coincides with the H-Baer radical.  This script prints the
recorded traces for x in the C2 action (dies immediately: x^2 = 0) and in
the Sweedler action (survives: y.x = 1 lets the sequence reach the unit
and stay there).
"""

from hopfrad import fixture_by_name
from hopfrad.radicals import wh_membership


def show(name, a):
    M = fixture_by_name(name).M
    verdict, detail, trace = wh_membership(M, a)
    print(f"{name}, start {a}: {verdict}")
    if verdict == "nilpotent":
        print(f"  subspace over-approximation reaches zero at step {detail}")
    else:
        print(f"  surviving sequence of length {len(trace.values)}:")
        for i, value in enumerate(trace.values):
            print(f"    a_{i + 1} = {value}")
    print()


if __name__ == "__main__":
    show("e2", (0, 1))
    show("e5", (0, 1))
    show("e5-f3", (0, 1))
