"""Command line: check relations on a scene, run the verification suite, render SVG.

A scene is a JSON document::

    {
      "points": {"A": ["0", "0"], "B": ["4", "0"], "C": ["1", "(sqrt 2)"]},
      "figures": {"T": ["A", "B", "C"]},
      "unit": ["U", "V"]
    }

Coordinates are exact literals (``"p/q"``, ``"p"`` or prefix terms such as
``"(div 1 (sqrt 2))"``); JSON integers are accepted, floats are rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from . import axioms
from .exact import ConstructionError, DomainError, as_exact
from .figures import (
    Triangle,
    circumscribed_rectangle_points,
    circumscribed_rectangles,
    equal_figures,
    equal_rectangles,
    first_circumscribed_rectangle,
    placement,
    rect_of_points,
)
from .plane import Point, Segment, between, concyclic, congruent, foot_of_perpendicular, lay_off, orthocenter, parallel
from .proportion import ORIGIN, proportion_holds

__all__ = ["Scene", "SceneError", "main", "svg_document"]


class SceneError(ValueError):
    """Malformed scene or bad command arguments."""


def _literal(v, where):
    if isinstance(v, bool) or isinstance(v, float):
        raise SceneError(f"{where}: only exact literals are accepted, got {v!r}")
    if isinstance(v, int):
        return as_exact(v)
    if not isinstance(v, str):
        raise SceneError(f"{where}: expected an exact literal, got {v!r}")
    try:
        return as_exact(v)
    except (ConstructionError, DomainError, TypeError) as exc:
        raise SceneError(f"{where}: {exc}") from exc


@dataclass
class Scene:
    points: dict = field(default_factory=dict)
    figures: dict = field(default_factory=dict)
    unit: tuple | None = None

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise SceneError("scene must be a JSON object")
        unknown = set(data) - {"points", "figures", "unit"}
        if unknown:
            raise SceneError(f"unknown scene keys: {sorted(unknown)}")
        pts = {}
        for name, xy in data.get("points", {}).items():
            if not isinstance(xy, list) or len(xy) != 2:
                raise SceneError(f"point {name}: expected [x, y]")
            pts[name] = Point(_literal(xy[0], f"point {name}"), _literal(xy[1], f"point {name}"))
        figs = {}
        for name, names in data.get("figures", {}).items():
            if not isinstance(names, list) or len(names) not in (3, 4):
                raise SceneError(f"figure {name}: expected 3 or 4 point names")
            for n in names:
                if n not in pts:
                    raise SceneError(f"figure {name}: unknown point {n!r}")
            figs[name] = tuple(names)
        unit = data.get("unit")
        if unit is not None:
            if not isinstance(unit, list) or len(unit) != 2 or any(n not in pts for n in unit):
                raise SceneError("unit: expected two defined point names")
            unit = tuple(unit)
        return cls(pts, figs, unit)

    @classmethod
    def load(cls, path):
        try:
            with open(path) as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SceneError(f"{path}: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self):
        out = {"points": {n: [p.x.to_literal(), p.y.to_literal()] for n, p in self.points.items()}}
        if self.figures:
            out["figures"] = {n: list(v) for n, v in self.figures.items()}
        if self.unit is not None:
            out["unit"] = list(self.unit)
        return out

    def dumps(self):
        return json.dumps(self.to_dict(), indent=2)

    def point(self, name):
        try:
            return self.points[name]
        except KeyError:
            raise SceneError(f"unknown point {name!r}") from None

    def figure(self, name):
        if name not in self.figures:
            raise SceneError(f"unknown figure {name!r}")
        return tuple(self.points[n] for n in self.figures[name])


# -- check --------------------------------------------------------------


def _dims(rects):
    return ", ".join(f"{r.width.to_literal()} x {r.height.to_literal()}" for r in rects)


def _as_fig(pts):
    return Triangle(*pts) if len(pts) == 3 else pts


def _arity(args, n, relation):
    if len(args) != n:
        raise SceneError(f"{relation} takes {n} arguments, got {len(args)}")


def check(scene, relation, args):
    """(verdict, extra lines) for one relation."""
    extra = []
    if relation in ("ET", "EF"):
        _arity(args, 2, relation)
        f1, f2 = (scene.figure(a) for a in args)
        if relation == "ET":
            if len(f1) != 3 or len(f2) != 3:
                raise SceneError("ET compares two triangles")
            rs = [[first_circumscribed_rectangle(f)[0]] for f in (f1, f2)]
            verdict = equal_rectangles(rs[0][0], rs[1][0])
        else:
            rs = [circumscribed_rectangles(_as_fig(f)) for f in (f1, f2)]
            verdict = equal_figures(f1, f2)
        for name, r in zip(args, rs):
            extra.append(f"{name}: circumscribed {_dims(r)}")
    elif relation == "ER":
        _arity(args, 2, relation)
        r1, r2 = (rect_of_points(*scene.figure(a)) for a in args)
        verdict = equal_rectangles(r1, r2)
        extra.append(f"{args[0]}: {_dims([r1])}")
        extra.append(f"{args[1]}: {_dims([r2])}")
    elif relation == "proportion":
        _arity(args, 8, relation)
        p = [scene.point(a) for a in args]
        verdict = proportion_holds(*(Segment(p[i], p[i + 1]) for i in range(0, 8, 2)))
    elif relation == "between":
        _arity(args, 3, relation)
        verdict = between(*(scene.point(a) for a in args))
    elif relation in ("congruent", "parallel", "concyclic"):
        _arity(args, 4, relation)
        fn = {"congruent": congruent, "parallel": parallel, "concyclic": concyclic}[relation]
        verdict = fn(*(scene.point(a) for a in args))
    else:
        raise SceneError(f"unknown relation {relation!r}")
    return verdict, extra


# -- render -------------------------------------------------------------


def _xy(p):
    return float(p.x.approx(6)), float(p.y.approx(6))


def svg_document(polylines, points, size=480, margin=30):
    """SVG text for (closed, [Point], colour) polylines and labelled points.

    Coordinates are the 6-digit decimal display values; nothing drawn here
    is ever fed back into a predicate.
    """
    coords = [_xy(p) for _, pts, _ in polylines for p in pts] + [_xy(p) for _, p in points]
    xs, ys = [c[0] for c in coords], [c[1] for c in coords]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    k = (size - 2 * margin) / span

    def tx(p):
        x, y = _xy(p)
        return margin + (x - min(xs)) * k, size - margin - (y - min(ys)) * k

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    out.append(f'<rect width="{size}" height="{size}" fill="white"/>')
    for closed, pts, colour in polylines:
        path = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(tx, pts))
        tag = "polygon" if closed else "polyline"
        out.append(f'<{tag} points="{path}" fill="none" stroke="{colour}" stroke-width="1.5"/>')
    for label, p in points:
        x, y = tx(p)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="black"/>')
        out.append(f'<text x="{x + 5:.3f}" y="{y - 5:.3f}" font-family="sans-serif" font-size="13">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(scene, construction, args):
    if construction == "ER-placement":
        _arity(args, 2, construction)
        r, s = (rect_of_points(*scene.figure(a)) for a in args)
        pts = placement(r, s)
        lines = [
            (True, [pts[n] for n in "BEFG"], "steelblue"),
            (True, [pts[n] for n in "BMLA"], "darkorange"),
            (True, [pts[n] for n in "HFKL"], "gray"),
            (False, [pts["H"], pts["K"]], "crimson"),
        ]
        return svg_document(lines, sorted(pts.items()))
    if construction == "circumscribed":
        _arity(args, 1, construction)
        fig = scene.figure(args[0])
        names = scene.figures[args[0]]
        lines = [(True, list(fig), "black")]
        colours = ("steelblue", "darkorange", "seagreen")
        for i, corners in enumerate(circumscribed_rectangle_points(_as_fig(fig))):
            lines.append((True, list(corners), colours[i % 3]))
        return svg_document(lines, list(zip(names, fig)))
    if construction == "proportion":
        _arity(args, 8, construction)
        p = [scene.point(a) for a in args]
        segs = [Segment(p[i], p[i + 1]) for i in range(0, 8, 2)]
        x_arm, y_arm = Point(as_exact(1), as_exact(0)), Point(as_exact(0), as_exact(1))
        b, c = lay_off(ORIGIN, x_arm, segs[0]), lay_off(ORIGIN, y_arm, segs[1])
        b2, c2 = lay_off(ORIGIN, x_arm, segs[2]), lay_off(ORIGIN, y_arm, segs[3])
        far_x = b if b.x > b2.x else b2
        far_y = c if c.y > c2.y else c2
        lines = [
            (False, [far_x, ORIGIN, far_y], "black"),
            (False, [b, c], "steelblue"),
            (False, [b2, c2], "darkorange"),
        ]
        return svg_document(lines, [("A", ORIGIN), ("B", b), ("C", c), ("b", b2), ("c", c2)])
    if construction == "orthocenter":
        _arity(args, 1, construction)
        fig = scene.figure(args[0])
        if len(fig) != 3:
            raise SceneError("orthocenter needs a triangle")
        a, b, c = fig
        h = orthocenter(a, b, c)
        lines = [(True, [a, b, c], "black")]
        for v, p, q in ((a, b, c), (b, c, a), (c, a, b)):
            lines.append((False, [v, foot_of_perpendicular(v, p, q), h], "steelblue"))
        return svg_document(lines, list(zip(scene.figures[args[0]], fig)) + [("H", h)])
    raise SceneError(f"unknown construction {construction!r}")


# -- main ---------------------------------------------------------------


def _parser():
    ap = argparse.ArgumentParser(prog="equalfigures", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="evaluate one relation on a scene")
    c.add_argument("--scene", required=True)
    c.add_argument(
        "--relation",
        required=True,
        choices=["ET", "EF", "ER", "proportion", "between", "congruent", "parallel", "concyclic"],
    )
    c.add_argument("args", nargs="*", help="point or figure names")

    v = sub.add_parser("verify", help="run the randomized verification suite")
    v.add_argument("--statements", default="all", help="'all' or a comma-separated list")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", help="write one JSON record per trial here")
    v.add_argument("--workers", type=int, default=1)

    r = sub.add_parser("render", help="draw a construction as SVG")
    r.add_argument("--scene", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("construction", choices=["ER-placement", "circumscribed", "proportion", "orthocenter"])
    r.add_argument("args", nargs="*", help="point or figure names")
    return ap


def _cmd_verify(ns):
    if ns.trials < 1:
        raise SceneError("--trials must be positive")
    if ns.statements == "all":
        names = axioms.statement_ids()
    else:
        names = [s.strip() for s in ns.statements.split(",") if s.strip()]
        unknown = [n for n in names if n not in axioms.STATEMENTS]
        if unknown:
            raise SceneError(f"unknown statement(s): {', '.join(unknown)}")
    suite = axioms.verify_all(ns.trials, ns.seed, names, ns.workers)
    if ns.report:
        with open(ns.report, "w") as fh:
            for line in suite.lines():
                fh.write(line + "\n")
    print(suite.summary())
    return 0 if suite.ok else 1


def main(argv=None):
    ns = _parser().parse_args(argv)
    try:
        if ns.command == "check":
            verdict, extra = check(Scene.load(ns.scene), ns.relation, ns.args)
            print("holds" if verdict else "fails")
            for line in extra:
                print(line)
            return 0 if verdict else 1
        if ns.command == "verify":
            return _cmd_verify(ns)
        svg = render(Scene.load(ns.scene), ns.construction, ns.args)
        with open(ns.out, "w") as fh:
            fh.write(svg)
        print(f"wrote {ns.out}")
        return 0
    except (SceneError, DomainError, ConstructionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
