"""Running the randomized verification suite.

Each statement has a generator that constructs cases satisfying its
hypotheses, and a conclusion evaluated with the defined relations.  This
runs every statement a few times, then breaks the equal-triangle relation
on purpose to show what a counterexample report looks like.
"""

import sys

from equalfigures import axioms, figures
from equalfigures.exact import sqrt
from equalfigures.figures import RectWH
from equalfigures.plane import foot_of_perpendicular, sqdist

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 5

suite = axioms.verify_all(trials, seed=0)
print(suite.summary())

# A wrong rectangle: base AB but the height taken from B to line CA.
original = figures.first_circumscribed_rectangle


def mismatched(t):
    a, b, c = figures._as_triangle(t).points
    foot = foot_of_perpendicular(b, c, a)
    return RectWH(sqrt(sqdist(a, b)), sqrt(sqdist(b, foot))), (a, b, foot, c)


figures.first_circumscribed_rectangle = mismatched
try:
    reports = axioms.verify("ETforward", 10, seed=42)
    bad = [r for r in reports if r.verdict == axioms.VIOLATED]
    print(f"\nwith the broken rectangle, ETforward fails {len(bad)} of {len(reports)} trials")
    line = bad[0].to_json()
    print("first witness:", line)
    print("still a counterexample when reloaded:", axioms.recheck(line))
finally:
    figures.first_circumscribed_rectangle = original
print("against the real definition:", axioms.recheck(line))
