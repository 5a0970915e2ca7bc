"""Sheet tracking on the degree-5 cover x : curve -> P^1.

The fiber over a base point is an ordered 5-tuple of y-values; continuation
moves the whole fiber along explicit paths with adaptive stepping, Newton
correction, and a separation guard.  Paths are lists of primitives (straight
segments and circular arcs), each parametrized by t in [0, 1]; integration
later runs one Gauss-Legendre quadrature per primitive.  Paths are built to
clear every singular-fiber x-value by a fixed fraction of the local gap.
"""

from __future__ import annotations

import mpmath as mp

from ..errors import SheetCollision


def f_affine(x, y):
    return x * (y ** 5 + 1) + x ** 2 * y ** 2 - x ** 4 * y - 2 * y ** 3


def fy_affine(x, y):
    return 5 * x * y ** 4 + 2 * x ** 2 * y - x ** 4 - 6 * y ** 2


def y_coefficients(x):
    """Coefficients of f(x, .) in y, highest first."""
    return [x, 0, -2, x * x, -(x ** 4), x]


def fiber(x, prec: int | None = None):
    """The five y-values over x, sorted deterministically."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 20):
        ys = mp.polyroots([mp.mpc(c) for c in y_coefficients(mp.mpc(x))],
                          extraprec=prec // 2 + 40, maxsteps=400)
    return sorted(ys, key=lambda y: (mp.nstr(mp.re(y), 18), mp.nstr(mp.im(y), 18)))


HUB_RADIUS = mp.mpf("2.4")
HUB_ANGLE_DEG = 324
ZERO_POINT_ANGLE_DEG = 36
LEVEL_BASE = mp.mpf("1.60")
LEVEL_STEP = mp.mpf("0.038")
ANGLE_OFFSET_STEP = mp.mpf("0.012")


def hub_point(prec: int | None = None):
    """The base point of all loops and integrations.

    It sits outside the outermost branch points, in the middle of the widest
    angular gap, so the nested loop system below stays embedded."""
    with mp.workprec((prec or mp.mp.prec) + 10):
        return HUB_RADIUS * mp.e ** (1j * mp.pi * HUB_ANGLE_DEG / 180)


def singular_x_values(prec: int | None = None):
    """All x with a degenerate fiber: 0, the 5th roots of unity (nodes), and
    the ten roots of 256 x^10 - 837 x^5 + 3456 (simple branch points)."""
    prec = prec or mp.mp.prec
    with mp.workprec(prec + 20):
        out = [mp.mpc(0)]
        for k in range(5):
            out.append(mp.e ** (2j * mp.pi * k / 5))
        ring = mp.polyroots([mp.mpf(256), 0, 0, 0, 0, mp.mpf(-837),
                             0, 0, 0, 0, mp.mpf(3456)],
                            extraprec=prec, maxsteps=400)
        out.extend(sorted(ring, key=lambda r: float(mp.arg(r))))
        return out


class Segment:
    kind = "seg"

    def __init__(self, a, b):
        self.a = mp.mpc(a)
        self.b = mp.mpc(b)

    def at(self, t):
        return self.a + (self.b - self.a) * t

    def deriv(self, t):
        return self.b - self.a

    @property
    def start(self):
        return self.a

    @property
    def end(self):
        return self.b

    def reversed(self):
        return Segment(self.b, self.a)

    def dense(self, max_step):
        L = abs(self.b - self.a)
        n = max(1, int(float(L / max_step)) + 1)
        return [self.at(mp.mpf(k) / n) for k in range(n + 1)]


class Arc:
    kind = "arc"

    def __init__(self, center, radius, a0, a1):
        self.center = mp.mpc(center)
        self.radius = mp.mpf(radius)
        self.a0 = mp.mpf(a0)
        self.a1 = mp.mpf(a1)

    def at(self, t):
        ang = self.a0 + (self.a1 - self.a0) * t
        return self.center + self.radius * mp.e ** (1j * ang)

    def deriv(self, t):
        ang = self.a0 + (self.a1 - self.a0) * t
        return 1j * (self.a1 - self.a0) * self.radius * mp.e ** (1j * ang)

    @property
    def start(self):
        return self.at(mp.mpf(0))

    @property
    def end(self):
        return self.at(mp.mpf(1))

    def reversed(self):
        return Arc(self.center, self.radius, self.a1, self.a0)

    def dense(self, max_step):
        n = max(2, int(float(abs(self.a1 - self.a0) / mp.mpf("0.22"))) + 1)
        return [self.at(mp.mpf(k) / n) for k in range(n + 1)]


class Path:
    """A chain of primitives with matching endpoints."""

    def __init__(self, prims):
        self.prims = list(prims)

    @property
    def start(self):
        return self.prims[0].start

    @property
    def end(self):
        return self.prims[-1].end

    def reversed(self) -> "Path":
        return Path([p.reversed() for p in reversed(self.prims)])

    def __add__(self, other: "Path") -> "Path":
        return Path(self.prims + other.prims)

    def dense_points(self, max_step=mp.mpf("0.05")):
        pts = []
        for p in self.prims:
            d = p.dense(max_step)
            if pts:
                d = d[1:]
            pts.extend(d)
        return pts


def line_with_detours(start, end, obstacles, clearance_frac=mp.mpf("0.35")) -> Path:
    """Straight path from start to end with arcs around obstacles closer
    than clearance_frac times their own gap."""
    seg = end - start
    L = abs(seg)
    if L == 0:
        return Path([Segment(start, end)])
    events = []
    for b, gap in obstacles:
        tpar = mp.re((b - start) / seg)
        if tpar <= 0 or tpar >= 1:
            continue
        dist = abs(start + seg * tpar - b)
        radius = clearance_frac * gap
        if dist < radius:
            events.append((tpar, b, radius))
    events.sort(key=lambda e: float(e[0]))
    prims = []
    cur = start
    direction = seg / L
    for tpar, b, radius in events:
        foot = start + seg * tpar
        along = mp.sqrt(max(radius ** 2 - abs(foot - b) ** 2, mp.mpf(0)))
        entry = foot - direction * along
        exit_ = foot + direction * along
        a_entry = mp.arg(entry - b)
        a_exit = mp.arg(exit_ - b)
        da = a_exit - a_entry
        while da <= -mp.pi:
            da += 2 * mp.pi
        while da > mp.pi:
            da -= 2 * mp.pi
        if abs(entry - cur) > 0:
            prims.append(Segment(cur, entry))
        prims.append(Arc(b, radius, a_entry, a_entry + da))
        cur = exit_
    if abs(end - cur) > 0 or not prims:
        prims.append(Segment(cur, end))
    return Path(prims)


class PlaneCurve:
    """Numeric model of the plane curve with a fixed hub fiber."""

    def __init__(self, prec: int | None = None):
        self.prec = prec or mp.mp.prec
        with mp.workprec(self.prec + 20):
            self.hub = hub_point(self.prec)
            self.singular = singular_x_values(self.prec)
            self.hub_fiber = fiber(self.hub, self.prec)
            self.gaps = []
            for i, b in enumerate(self.singular):
                g = min(abs(b - c) for j, c in enumerate(self.singular) if j != i)
                self.gaps.append(min(g, abs(self.hub - b)))

    # -- path construction ---------------------------------------------------

    def obstacles(self, exclude=()):
        return [(b, g) for i, (b, g) in enumerate(zip(self.singular, self.gaps))
                if i not in exclude]

    def branch_angle(self, index: int):
        """Angle used for the radial descent (the origin gets its own slot)."""
        b = self.singular[index]
        if abs(b) < mp.mpf("0.01"):
            return mp.pi * ZERO_POINT_ANGLE_DEG / 180
        ang = mp.arg(b)
        if ang < 0:
            ang += 2 * mp.pi
        return ang

    def loop_rank(self, index: int) -> int:
        """Position in the counterclockwise order starting at the hub angle."""
        theta0 = mp.pi * HUB_ANGLE_DEG / 180
        def key(i):
            a = self.branch_angle(i) - theta0
            while a <= 0:
                a += 2 * mp.pi
            return float(a)
        order = sorted(range(len(self.singular)), key=key)
        return order.index(index)

    def loop_order(self) -> list[int]:
        theta0 = mp.pi * HUB_ANGLE_DEG / 180
        def key(i):
            a = self.branch_angle(i) - theta0
            while a <= 0:
                a += 2 * mp.pi
            return float(a)
        return sorted(range(len(self.singular)), key=key)

    def loop_around(self, index: int, radius_frac=mp.mpf("0.22")) -> Path:
        """Nested loop: drop from the hub to this loop's own radial level,
        run counterclockwise to the branch angle, descend radially, circle
        the branch point counterclockwise, and return the same way.  Loops
        at distinct levels and offsets are pairwise disjoint away from the
        hub, so composing the permutations in rank order gives the boundary
        of the disk."""
        theta0 = mp.pi * HUB_ANGLE_DEG / 180
        rank = self.loop_rank(index)
        level = LEVEL_BASE + rank * LEVEL_STEP
        off = (rank + 1) * ANGLE_OFFSET_STEP
        b = self.singular[index]
        r = self.gaps[index] * radius_frac
        phi = self.branch_angle(index)
        dphi = phi - (theta0 + off)
        while dphi <= 0:
            dphi += 2 * mp.pi
        drop_pt = level * mp.e ** (1j * (theta0 + off))
        tail = Path([
            Arc(mp.mpc(0), HUB_RADIUS, theta0, theta0 + off),
            Segment(HUB_RADIUS * mp.e ** (1j * (theta0 + off)), drop_pt),
            Arc(mp.mpc(0), level, theta0 + off, theta0 + off + dphi),
        ])
        if abs(b) < mp.mpf("0.01"):
            entry_radius = r
        else:
            entry_radius = abs(b) + r
        entry = entry_radius * mp.e ** (1j * phi)
        descend = Path([Segment(level * mp.e ** (1j * phi), entry)])
        a0 = mp.arg(entry - b)
        circle = Path([Arc(b, r, a0, a0 + 2 * mp.pi)])
        full = tail + descend + circle + descend.reversed() + tail.reversed()
        return full

    def infinity_loop(self) -> Path:
        theta0 = mp.pi * HUB_ANGLE_DEG / 180
        return Path([Arc(mp.mpc(0), HUB_RADIUS, theta0, theta0 + 2 * mp.pi)])

    def path_to(self, target, exclude=()) -> Path:
        return line_with_detours(self.hub, target, self.obstacles(exclude=exclude))

    # -- continuation ----------------------------------------------------------

    def continue_fiber(self, path: Path, start_fiber=None, record=None):
        """Analytic continuation of the full fiber along the path.

        ``record(prim_index, t, x, ys)`` is called at every accepted step.
        Returns the endpoint fiber in start order.  Tracking runs at a
        capped precision; quadrature later re-polishes sheets to full
        precision from the recorded samples."""
        track = min(self.prec, 96)
        with mp.workprec(track + 30):
            ys = [mp.mpc(v) for v in (start_fiber or self.hub_fiber)]
            if record:
                record(0, mp.mpf(0), path.prims[0].start, ys)
            for pi, prim in enumerate(path.prims):
                ys = self._continue_primitive(pi, prim, ys, record)
            return ys

    def dist_to_singular(self, x):
        return min(abs(x - b) for b in self.singular)

    def _continue_primitive(self, pi, prim, ys, record):
        t = mp.mpf(0)
        scale = abs(prim.deriv(mp.mpf("0.5"))) + mp.mpf("1e-30")
        step = min(mp.mpf(1), mp.mpf("0.5") / scale)
        guard = 0
        while t < 1:
            # geometric cap: never move more than a fraction of the gap to
            # the nearest singular fiber (prevents leaping around a loop)
            xcur = prim.at(t)
            cap = mp.mpf("0.35") * self.dist_to_singular(xcur) / scale
            h = min(step, cap, 1 - t)
            xt = prim.at(t + h)
            new = self._newton_fiber(xt, ys)
            ok = new is not None
            if ok:
                sep = _min_separation(new)
                move = max(abs(n - o) for n, o in zip(new, ys))
                ok = move < sep / 3
            if not ok:
                step = step / 2
                guard += 1
                if guard > 120:
                    raise SheetCollision(f"step control failed near x = {mp.nstr(prim.at(t), 8)}")
                continue
            ys = new
            t = t + h
            if record:
                record(pi, t, xt, ys)
            if move < sep / 12:
                step = min(step * 2, mp.mpf(1))
        return ys

    def _newton_fiber(self, x, ys):
        out = []
        sep = _min_separation(ys)
        target = mp.mpf(2) ** (-(mp.mp.prec - 16))
        for y0 in ys:
            y = y0
            ok = False
            for _ in range(60):
                fv = f_affine(x, y)
                if abs(fv) < target * (1 + abs(y)) ** 5:
                    ok = True
                    break
                dv = fy_affine(x, y)
                if dv == 0:
                    return None
                dy = fv / dv
                y = y - dy
                if abs(y - y0) > 0.55 * sep:
                    return None
            if not ok:
                return None
            out.append(y)
        return out

    def refine_sheet(self, x, y_guess):
        """Newton-polish a single sheet value at x from a nearby guess."""
        y = mp.mpc(y_guess)
        for _ in range(80):
            fv = f_affine(x, y)
            dv = fy_affine(x, y)
            if dv == 0:
                raise SheetCollision("vanishing fiber derivative during refinement")
            dy = fv / dv
            y = y - dy
            if abs(dy) < mp.mpf(2) ** (-self.prec - 8) * (1 + abs(y)):
                return y
        raise SheetCollision("sheet refinement did not converge")

    def monodromy_permutation(self, path: Path, start_fiber=None):
        """sigma with: the sheet at start position i ends at position sigma(i)."""
        start = [mp.mpc(v) for v in (start_fiber or self.hub_fiber)]
        end = self.continue_fiber(path, start)
        return match_permutation(start, end)


def match_permutation(start, end):
    perm = [None] * 5
    used = [False] * 5
    for i, ye in enumerate(end):
        best, bestd = None, None
        for j, ys0 in enumerate(start):
            if used[j]:
                continue
            d = abs(ye - ys0)
            if bestd is None or d < bestd:
                best, bestd = j, d
        if bestd > _min_separation(start) / 4:
            raise SheetCollision("endpoint fiber does not match the start fiber")
        perm[i] = best
        used[best] = True
    sigma = [None] * 5
    for end_slot, start_slot in enumerate(perm):
        sigma[start_slot] = end_slot
    return tuple(sigma)


def _min_separation(ys):
    m = None
    for i in range(len(ys)):
        for j in range(i + 1, len(ys)):
            d = abs(ys[i] - ys[j])
            if m is None or d < m:
                m = d
    return m
