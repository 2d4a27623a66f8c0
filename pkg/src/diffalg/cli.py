"""Command-line front end: evaluates one command against a session file.

    diffalg mul session.txt f g --json

Exit codes: 0 success, 2 mathematical "not found within bound",
1 on errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import charp, nucleus, petit, plt
from .errors import DiffalgError
from .ore import left_divmod, right_divmod, right_gcd
from .session import parse_ore, parse_session

COMMANDS = [
    "mul", "divmod-r", "divmod-l", "gcd-r", "petit", "assoc", "two-sided",
    "nuclei", "eigenring", "apoly", "vp", "minpoly", "center", "bound",
    "diffext", "split", "roots", "resultant", "charpoly", "similar",
    "scenario",
]

EXIT_NOT_FOUND = 2


def _subspace_dict(sub):
    out = {"dim": sub.dim, "basis": [str(b) for b in sub.basis]}
    if sub.label:
        out["label"] = sub.label
    if sub.certified_max:
        out["certified_max"] = True
    if sub.lower_bound_only:
        out["lower_bound_only"] = True
    return out


class Driver:
    def __init__(self, session, seed, bound):
        self.session = session
        self.tower = session.build_tower()
        self.env = session.build_bindings(self.tower)
        self.seed = seed
        self.bound = bound

    def poly(self, src):
        if src in self.env:
            return self.env[src]
        return parse_ore(self.tower, src, self.env)

    def elem(self, src):
        return self.tower.parse_element(src)

    def ansatz(self):
        if self.tower.finite_over_constants:
            return None
        n = self.bound if self.bound is not None else None
        if n is None:
            return None
        return nucleus.AnsatzConfig(numerator_bound=n)

    def eigenring_cfg(self, algebra):
        if self.tower.finite_over_constants:
            return None
        if self.bound is not None:
            return nucleus.AnsatzConfig(numerator_bound=self.bound)
        return nucleus.default_ansatz(algebra)

    # -- commands ------------------------------------------------------------

    def run(self, command, args):
        method = getattr(self, "cmd_" + command.replace("-", "_"))
        return method(*args)

    def cmd_mul(self, f, g):
        return {"product": str(self.poly(f) * self.poly(g))}, 0

    def cmd_divmod_r(self, g, f):
        q, r = right_divmod(self.poly(g), self.poly(f))
        return {"quotient": str(q), "remainder": str(r)}, 0

    def cmd_divmod_l(self, g, f):
        q, r = left_divmod(self.poly(g), self.poly(f))
        return {"quotient": str(q), "remainder": str(r)}, 0

    def cmd_gcd_r(self, f, g):
        return {"gcd": str(right_gcd(self.poly(f), self.poly(g)))}, 0

    def cmd_petit(self, f):
        A = petit.make_petit(self.poly(f))
        out = {
            "f": str(A.modulus),
            "m": A.m,
            "two_sided": A.two_sided,
            "t_associative": A.t_associative,
        }
        if self.tower.finite_over_constants:
            out["dim_F"] = A.f_dimension()
        return out, 0

    def cmd_assoc(self, f, a, b, c):
        A = petit.make_petit(self.poly(f))
        elems = [A.element(self.poly(s)) for s in (a, b, c)]
        return {"associator": str(A.associator(*elems))}, 0

    def cmd_two_sided(self, f):
        return {"two_sided": petit.is_two_sided(self.poly(f))}, 0

    def cmd_nuclei(self, f):
        A = petit.make_petit(self.poly(f))
        out = {
            "left": _subspace_dict(nucleus.left_nucleus(A)),
            "middle": _subspace_dict(nucleus.middle_nucleus(A)),
            "right": _subspace_dict(
                nucleus.right_nucleus(A, self.eigenring_cfg(A))),
        }
        if self.tower.finite_over_constants:
            nuc, center = nucleus.nucleus_and_center(A)
            out["nucleus"] = _subspace_dict(nuc)
            out["center"] = _subspace_dict(center)
        return out, 0

    def cmd_eigenring(self, f):
        A = petit.make_petit(self.poly(f))
        sub = nucleus.right_nucleus(A, self.eigenring_cfg(A))
        return _subspace_dict(sub), 0

    def cmd_apoly(self, f):
        A = petit.make_petit(self.poly(f))
        v = nucleus.a_polynomial_test(A, self.eigenring_cfg(A))
        out = {"verdict": v.verdict, "dim": v.dim,
               "certified_max": v.certified_max}
        if v.note:
            out["note"] = v.note
        return out, 0

    def cmd_vp(self, b):
        return {"value": str(charp.v_p(self.tower, self.elem(b)))}, 0

    def cmd_minpoly(self):
        P = charp.min_p_polynomial(self.tower)
        return {"e": P.e, "cs": [str(c) for c in P.cs],
                "g": str(P.g_ore())}, 0

    def cmd_center(self, d0=None):
        d0_elem = self.elem(d0) if d0 is not None else None
        C = charp.center_of_R(self.tower, d0_elem)
        return {"z": str(C.z), "constant_field": C.constant_field,
                "certified": C.certified}, 0

    def cmd_bound(self, f):
        return {"bound": str(charp.bound_of(self.poly(f)))}, 0

    def cmd_diffext(self, d0):
        A = charp.differential_extension(self.tower, self.elem(d0))
        return {"f": str(A.modulus), "dim_F": A.f_dimension(),
                "two_sided": A.two_sided}, 0

    def cmd_split(self, d0):
        P = charp.min_p_polynomial(self.tower).with_d0(self.elem(d0))
        report = charp.split_report(self.tower, P, bound=self.bound)
        code = 0 if report["verdict"] == "split" else EXIT_NOT_FOUND
        return report, code

    def cmd_roots(self, f):
        poly = self.poly(f)
        bound = self.bound if self.bound is not None else 2 * max(poly.deg, 1)
        roots = charp.right_root_search(poly, bound)
        return {"roots": [str(r) for r in roots], "bound": bound}, 0

    def cmd_resultant(self, f, g):
        r = plt.resultant(self.poly(f), self.poly(g),
                          seed=self.seed or 0)
        return {"resultant": str(r)}, 0

    def cmd_charpoly(self, f):
        T = plt.from_polynomial(self.poly(f))
        cert = plt.characteristic_polynomial(T, seed=self.seed or 0)
        return {"charpoly": str(cert.charpoly),
                "vector": [str(v) for v in cert.vector]}, 0

    def cmd_similar(self, f, g):
        result = plt.similarity_search(self.poly(f), self.poly(g),
                                       bound=self.bound)
        if isinstance(result, plt.NotFoundWithinBound):
            return {"verdict": "not_found_within_bound",
                    "bound": result.bound}, EXIT_NOT_FOUND
        return {"u": str(result.u), "u_prime": str(result.u_prime)}, 0


def emit(result, as_json):
    if as_json:
        return json.dumps(result, sort_keys=True) + "\n"
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}{k}.", value[k])
        elif isinstance(value, list):
            lines.append(f"{prefix[:-1]} = [{', '.join(map(str, value))}]")
        else:
            lines.append(f"{prefix[:-1]} = {value}")

    walk("", result)
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="diffalg",
        description="exact arithmetic in differential polynomial rings "
                    "and their quotient algebras")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("session", nargs="?", default="-",
                        help="session file ('-' reads stdin; not needed "
                             "for scenario)")
    parser.add_argument("args", nargs="*", help="command operands")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--bound", type=int, default=None)
    opts = parser.parse_args(argv)

    try:
        if opts.command == "scenario":
            # operands are p e m; session not used
            values = [opts.session] + opts.args if opts.session != "-" \
                else opts.args
            p, e, m = (int(v) for v in values[:3])
            report = charp.scenario_builder(p, e, m, bound=opts.bound)
            sys.stdout.write(emit(report, opts.json))
            return 0

        if opts.session == "-":
            text = sys.stdin.read()
        else:
            with open(opts.session, encoding="utf-8") as fh:
                text = fh.read()
        session = parse_session(text)

        seed = opts.seed
        if seed is None and "seed" in session.options:
            seed = int(session.options["seed"])
        bound = opts.bound
        if bound is None and "bound" in session.options:
            bound = int(session.options["bound"])
        if bound is None and os.environ.get("DIFFALG_BOUND"):
            bound = int(os.environ["DIFFALG_BOUND"])
        as_json = opts.json or session.options.get("format") == "json"

        driver = Driver(session, seed, bound)
        result, code = driver.run(opts.command, opts.args)
        sys.stdout.write(emit(result, as_json))
        return code
    except DiffalgError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (ValueError, TypeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
