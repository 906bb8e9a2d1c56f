"""Dynkin diagram foldings and virtualization of path crystals.

Four families of non-simply-laced types embed into simply-laced ones by
folding: C_n into A_{2n-1}, B_n into D_{n+1}, G_2 into D_4, and F_4 into E_6.
A folding carries an orbit map sigma from source nodes to orbits of a diagram
automorphism of the target, scaling exponents gamma, and the induced
weight-lattice embedding psi with psi(Lambda_i) = gamma_i * sum of the
fundamental weights over sigma(i).

The gamma values are not hard-coded: they are solved at construction time as
the unique positive integers making psi(alpha_i) = gamma_i * sum of the
target simple roots over sigma(i), and that identity is then re-checked in
full, so the orientation conventions cannot drift.

Path virtualization applies psi breakpoint-wise.  Virtual root operators for
a source color i apply the target operators gamma_i times over each node of
sigma(i); verifiers check, exhaustively on generated models, that
virtualization intertwines the operators, that the induced generators
satisfy the cactus relations, and that the partial involutions commute with
virtualization.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .cactus import act, compose, identity_perm, theta_image, xi_perm
from .cartan import (
    DynkinType,
    all_nodes,
    cartan_matrix,
    components,
    connected_subdiagrams,
    is_connected,
    neighbors,
    node_mask,
    theta,
)
from .crystal import generate
from .errors import ConfigurationError, ModelIntegrityError, NotInImageError
from .paths import (
    PLPath,
    canonicalize,
    epsilon,
    paths_equal,
    phi,
    root_e,
    root_f,
)

DEFAULT_MAX_RANK = 4
DEFAULT_MAX_SIZE = 20000


class FoldingPair:
    """Folding data for one source/target pair, immutable after construction."""

    def __init__(self, x_type, y_type, sigma, aut, gamma, branch, theta_y):
        self.x_type = x_type
        self.y_type = y_type
        self._sigma = {i: frozenset(sigma[i]) for i in x_type.nodes}
        self.aut = dict(aut)
        self._gamma = dict(gamma)
        self.branch = branch
        self.theta_y = dict(theta_y)
        self.psi_matrix = tuple(
            tuple(
                self._gamma[i] if l in self._sigma[i] else 0
                for i in x_type.nodes
            )
            for l in y_type.nodes
        )

    def sigma(self, i: int) -> frozenset:
        return self._sigma[i]

    def gamma(self, i: int) -> int:
        return self._gamma[i]

    def sigma_set(self, nodes) -> frozenset:
        """Union of the orbits of a set of source nodes."""
        out: frozenset = frozenset()
        for i in nodes:
            out |= self._sigma[i]
        return out


def _fold_table(x: DynkinType):
    n = x.rank
    if x.family == "C":
        y = DynkinType("A", 2 * n - 1)
        sigma = {i: {i, 2 * n - i} for i in range(1, n)}
        sigma[n] = {n}
        aut = {i: 2 * n - i for i in y.nodes}
        branch = n
    elif x.family == "B":
        y = DynkinType("D", n + 1)
        sigma = {i: {i} for i in range(1, n)}
        sigma[n] = {n, n + 1}
        aut = {i: i for i in y.nodes}
        aut[n], aut[n + 1] = n + 1, n
        branch = n - 1
    elif x.family == "G":
        y = DynkinType("D", 4)
        sigma = {1: {1, 3, 4}, 2: {2}}
        # order-3 rotation of the outer nodes; the fork swap would give three
        # orbits and no bijection with the two G_2 nodes
        aut = {1: 3, 2: 2, 3: 4, 4: 1}
        branch = 2
    elif x.family == "F":
        y = DynkinType("E", 6)
        sigma = {1: {2}, 2: {4}, 3: {3, 5}, 4: {1, 6}}
        aut = {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
        branch = 2
    else:
        raise ConfigurationError(f"{x} has no simply-laced folding")
    return y, sigma, aut, branch


def _solve_gamma(x, y, sigma):
    """Unique positive integers solving psi(alpha_i) = gamma_i * sum of
    target simple roots over sigma(i), propagated along the source diagram."""
    ax = cartan_matrix(x)
    ay = cartan_matrix(y)
    g: dict = {1: Fraction(1)}
    todo = [1]
    while todo:
        i = todo.pop(0)
        for k in sorted(neighbors(x)[i]):
            if k in g:
                continue
            l = min(sigma[k])
            coupling = sum(ay[l - 1][j - 1] for j in sigma[i])
            g[k] = g[i] * Fraction(coupling, ax[k - 1][i - 1])
            todo.append(k)
    scale = lcm(*(g[i].denominator for i in x.nodes))
    ints = {i: int(g[i] * scale) for i in x.nodes}
    common = gcd(*ints.values())
    ints = {i: v // common for i, v in ints.items()}
    if any(v <= 0 for v in ints.values()):
        raise ModelIntegrityError(f"non-positive scaling exponents for {x}")
    return ints


def _check_root_identity(x, y, sigma, gamma):
    ax = cartan_matrix(x)
    ay = cartan_matrix(y)
    for i in x.nodes:
        # psi(alpha_i): alpha_i = sum_k ax[k][i] Lambda_k, then apply psi
        lhs = [0] * y.rank
        for k in x.nodes:
            coeff = ax[k - 1][i - 1]
            if coeff:
                for j in sigma[k]:
                    lhs[j - 1] += coeff * gamma[k]
        rhs = [0] * y.rank
        for j in sigma[i]:
            for l in y.nodes:
                rhs[l - 1] += gamma[i] * ay[l - 1][j - 1]
        if lhs != rhs:
            raise ModelIntegrityError(
                f"root identity fails for {x} at node {i}: {lhs} != {rhs}"
            )


def _check_orbit_structure(x, y, sigma, aut):
    covered = set()
    for i in x.nodes:
        orbit = set(sigma[i])
        if orbit & covered:
            raise ModelIntegrityError(f"orbits of {x} nodes overlap")
        covered |= orbit
        closure = set()
        j = min(orbit)
        while j not in closure:
            closure.add(j)
            j = aut[j]
        if closure != orbit:
            raise ModelIntegrityError(
                f"sigma({i}) = {sorted(orbit)} is not an automorphism orbit"
            )
    if covered != set(y.nodes):
        raise ModelIntegrityError(f"orbits do not partition the nodes of {y}")
    adj_y = neighbors(y)
    adj_x = neighbors(x)
    for i in x.nodes:
        for k in x.nodes:
            if i >= k:
                continue
            linked = any(b in adj_y[a] for a in sigma[i] for b in sigma[k])
            if linked != (k in adj_x[i]):
                raise ModelIntegrityError(
                    f"orbit map is not edge-preserving between {i} and {k}"
                )


def folding_pair(x, max_rank: int = DEFAULT_MAX_RANK) -> FoldingPair:
    """Folding data for a source type among C_n, B_n, G_2, F_4.

    The rank is capped (configurable) to keep generated target models at
    desk scale.  Construction validates the orbit structure, solves the
    scaling exponents, and re-checks the defining root identity exactly.
    """
    if isinstance(x, str):
        x = DynkinType.parse(x)
    if x.rank > max_rank:
        raise ConfigurationError(
            f"rank {x.rank} above the configured cap {max_rank}"
        )
    y, sigma, aut, branch = _fold_table(x)
    gamma = _solve_gamma(x, y, sigma)
    _check_root_identity(x, y, sigma, gamma)
    _check_orbit_structure(x, y, sigma, aut)
    theta_y = theta(y, all_nodes(y))
    return FoldingPair(x, y, sigma, aut, gamma, branch, theta_y)


def psi_weight(fold: FoldingPair, mu):
    """Apply the weight-lattice embedding to a source weight."""
    if len(mu) != fold.x_type.rank:
        raise ConfigurationError(f"weight must have length {fold.x_type.rank}")
    return tuple(
        sum(row[i] * mu[i] for i in range(fold.x_type.rank))
        for row in fold.psi_matrix
    )


def virtualize_path(fold: FoldingPair, path: PLPath) -> PLPath:
    """Push a source path to the target lattice, breakpoint by breakpoint."""
    if path.rtype != fold.x_type:
        raise ConfigurationError(f"path lives in {path.rtype}, not {fold.x_type}")
    bps = tuple(
        (t, tuple(Fraction(c) for c in psi_weight(fold, p)))
        for t, p in path.breakpoints
    )
    return canonicalize(PLPath(fold.y_type, bps))


def devirtualize(fold: FoldingPair, path: PLPath) -> PLPath:
    """Left inverse of virtualization, by exact per-breakpoint solve.

    Each source coordinate is read off one representative target coordinate
    divided by the scaling exponent; the remaining coordinates must agree or
    the path is not in the image.
    """
    if path.rtype != fold.y_type:
        raise ConfigurationError(f"path lives in {path.rtype}, not {fold.y_type}")
    out = []
    for t, p in path.breakpoints:
        x = tuple(
            p[min(fold.sigma(i)) - 1] / fold.gamma(i) for i in fold.x_type.nodes
        )
        for i in fold.x_type.nodes:
            for j in fold.sigma(i):
                if p[j - 1] != fold.gamma(i) * x[i - 1]:
                    raise NotInImageError(
                        f"breakpoint at t={t} is outside the embedded lattice"
                    )
        out.append((t, x))
    return canonicalize(PLPath(fold.x_type, tuple(out)))


def virtual_f(fold: FoldingPair, path: PLPath, i: int, descending=False):
    """Virtual lowering operator for source color i on a target path: the
    target operator applied gamma_i times over each node of sigma(i).
    Returns None if any step is undefined."""
    cur = path
    for j in sorted(fold.sigma(i), reverse=descending):
        for _ in range(fold.gamma(i)):
            cur = root_f(cur, j)
            if cur is None:
                return None
    return cur


def virtual_e(fold: FoldingPair, path: PLPath, i: int, descending=False):
    """Virtual raising operator; mirror of virtual_f."""
    cur = path
    for j in sorted(fold.sigma(i), reverse=descending):
        for _ in range(fold.gamma(i)):
            cur = root_e(cur, j)
            if cur is None:
                return None
    return cur


def s_tilde(fold: FoldingPair, nodes) -> tuple:
    """Word of target generators induced by a connected source subdiagram:
    the connected components of its orbit image, ascending by smallest node.
    The letters have mutually disconnected supports, so they commute."""
    nodes = frozenset(nodes)
    if not nodes or not is_connected(fold.x_type, nodes):
        raise ConfigurationError("generator index must be connected and nonempty")
    return tuple(components(fold.y_type, fold.sigma_set(nodes)))


def verify_component_identity(fold: FoldingPair) -> list:
    """For nested connected pairs whose outer orbit image is disconnected,
    check that the orbit image of the twisted inner set equals the disjoint
    union of the per-component twists of the inner image."""
    x, y = fold.x_type, fold.y_type
    subs = connected_subdiagrams(x)
    violations = []
    for outer in subs:
        comps = components(y, fold.sigma_set(outer))
        if len(comps) < 2:
            continue
        twist_outer = theta(x, outer)
        part_twists = [theta(y, comp) for comp in comps]
        for inner in subs:
            if not inner <= outer:
                continue
            lhs = fold.sigma_set(frozenset(twist_outer[j] for j in inner))
            rhs: frozenset = frozenset()
            for comp, twist in zip(comps, part_twists):
                piece = fold.sigma_set(inner) & comp
                rhs |= frozenset(twist[v] for v in piece)
            if lhs != rhs:
                violations.append(
                    {
                        "check": "component-identity",
                        "I": sorted(outer),
                        "J": sorted(inner),
                        "lhs": sorted(lhs),
                        "rhs": sorted(rhs),
                    }
                )
    return violations


def _image_table(fold, gx, gy):
    images = {}
    problems = []
    for b in range(len(gx)):
        target = gy.find(virtualize_path(fold, gx.path(b)))
        if target is None:
            problems.append({"check": "image-membership", "vertex": b})
        else:
            images[b] = target
    if len(set(images.values())) != len(images):
        problems.append({"check": "injectivity"})
    return images, problems


def verify_virtualization(fold: FoldingPair, lam, max_size=DEFAULT_MAX_SIZE) -> list:
    """Exhaustively check that virtualization embeds the source model into
    the target model: images are vertices, the map is injective, operators
    intertwine with the virtual operators including definedness, and the
    string statistics scale by gamma."""
    gx = generate(fold.x_type, lam, max_size=max_size)
    gy = generate(fold.y_type, psi_weight(fold, lam), max_size=max_size)
    images, violations = _image_table(fold, gx, gy)
    for b, target in images.items():
        pb = gx.path(b)
        qb = gy.path(target)
        for i in fold.x_type.nodes:
            lowered = root_f(pb, i)
            virtual_lowered = virtual_f(fold, qb, i)
            if (lowered is None) != (virtual_lowered is None):
                violations.append(
                    {"check": "f-definedness", "vertex": b, "color": i}
                )
            elif lowered is not None and not paths_equal(
                virtualize_path(fold, lowered), virtual_lowered
            ):
                violations.append(
                    {"check": "f-intertwine", "vertex": b, "color": i}
                )
            raised = root_e(pb, i)
            virtual_raised = virtual_e(fold, qb, i)
            if (raised is None) != (virtual_raised is None):
                violations.append(
                    {"check": "e-definedness", "vertex": b, "color": i}
                )
            elif raised is not None and not paths_equal(
                virtualize_path(fold, raised), virtual_raised
            ):
                violations.append(
                    {"check": "e-intertwine", "vertex": b, "color": i}
                )
            for j in fold.sigma(i):
                if epsilon(qb, j) != fold.gamma(i) * epsilon(pb, i) or phi(
                    qb, j
                ) != fold.gamma(i) * phi(pb, i):
                    violations.append(
                        {
                            "check": "string-scaling",
                            "vertex": b,
                            "color": i,
                            "target_color": j,
                        }
                    )
    return violations


def verify_virtual_relations(fold: FoldingPair, lam, max_size=DEFAULT_MAX_SIZE) -> list:
    """Check that the induced generator words satisfy the cactus relations of
    the source diagram, as permutations of the target model of the embedded
    highest weight.  Also checks that the letters of each word commute."""
    x = fold.x_type
    gy = generate(fold.y_type, psi_weight(fold, lam), max_size=max_size)
    subs = connected_subdiagrams(x)
    cache: dict = {}
    perms = {s: act(gy, s_tilde(fold, s), cache) for s in subs}
    ident = identity_perm(gy)
    violations = []

    def record(relation, outer, inner):
        violations.append(
            {"relation": relation, "I": sorted(outer), "J": sorted(inner)}
        )

    for s in subs:
        letters = s_tilde(fold, s)
        for a in range(len(letters)):
            for b in range(a + 1, len(letters)):
                pa, pb = cache[letters[a]], cache[letters[b]]
                if compose(pa, pb) != compose(pb, pa):
                    violations.append(
                        {
                            "relation": "letter-commute",
                            "I": sorted(s),
                            "J": sorted(letters[b]),
                        }
                    )
        if compose(perms[s], perms[s]) != ident:
            record(1, s, s)
    for a in subs:
        for b in subs:
            if node_mask(a) >= node_mask(b):
                continue
            if len(components(x, a | b)) < 2:
                continue
            if compose(perms[a], perms[b]) != compose(perms[b], perms[a]):
                record(2, a, b)
    for outer in subs:
        for inner in subs:
            if not inner <= outer:
                continue
            twisted = theta_image(x, outer, inner)
            if compose(perms[outer], perms[inner]) != compose(
                perms[twisted], perms[outer]
            ):
                record(3, outer, inner)
    return violations


def verify_commutative_diagram(fold: FoldingPair, lam, max_size=DEFAULT_MAX_SIZE) -> list:
    """Check, for every connected source subdiagram and every vertex, that
    virtualization intertwines the source partial involution with the induced
    word of target involutions; that devirtualization inverts virtualization;
    and that each induced word maps the image of the model onto itself."""
    x = fold.x_type
    gx = generate(x, lam, max_size=max_size)
    gy = generate(fold.y_type, psi_weight(fold, lam), max_size=max_size)
    images, violations = _image_table(fold, gx, gy)
    for b in range(len(gx)):
        try:
            back = devirtualize(fold, virtualize_path(fold, gx.path(b)))
        except NotInImageError:
            violations.append({"check": "left-inverse", "vertex": b})
            continue
        if not paths_equal(back, gx.path(b)):
            violations.append({"check": "left-inverse", "vertex": b})
    image_set = set(images.values())
    cache: dict = {}
    for sub in connected_subdiagrams(x):
        source_perm = xi_perm(gx, sub)
        target_perm = act(gy, s_tilde(fold, sub), cache)
        for b, target in images.items():
            lhs = virtualize_path(fold, gx.path(source_perm[b]))
            rhs = gy.path(target_perm[target])
            if not paths_equal(lhs, rhs):
                violations.append(
                    {"check": "diagram", "I": sorted(sub), "vertex": b}
                )
        if {target_perm[v] for v in image_set} != image_set:
            violations.append({"check": "image-stability", "I": sorted(sub)})
    return violations


def fold_info(fold: FoldingPair) -> dict:
    """JSON-ready summary of the folding data."""
    return {
        "X": str(fold.x_type),
        "Y": str(fold.y_type),
        "sigma": {str(i): sorted(fold.sigma(i)) for i in fold.x_type.nodes},
        "gamma": {str(i): fold.gamma(i) for i in fold.x_type.nodes},
        "aut": [fold.aut[j] for j in fold.y_type.nodes],
        "branch": fold.branch,
        "psi_matrix": [list(row) for row in fold.psi_matrix],
    }
