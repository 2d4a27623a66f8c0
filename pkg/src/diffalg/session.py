"""Line-oriented session files for the CLI.

    base=F3
    layer rational x
    delta x = 1
    option bound = 10
    f = t^2 - x

Header lines declare the tower (base, layers, derivation images) and
options; remaining lines bind names to Ore polynomial expressions over
t, the tower generators and earlier bindings.  '#' starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SessionSyntaxError, SessionTypeError
from .exprs import parse_expr
from .fields import make_tower
from .ore import OrePoly


@dataclass
class SessionFile:
    base: str = "Q"
    layers: list = field(default_factory=list)
    delta: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)
    bindings: dict = field(default_factory=dict)
    binding_lines: dict = field(default_factory=dict, compare=False)

    def build_tower(self):
        base = self.base if self.base == "Q" else int(self.base[1:])
        return make_tower(base, self.layers, delta=self.delta)

    def build_bindings(self, tower):
        """Evaluate every binding into an OrePoly, in order."""
        env = {}
        for name, src in self.bindings.items():
            line = self.binding_lines.get(name, 1)
            env[name] = parse_ore(tower, src, env, line=line)
        return env

    def to_text(self):
        lines = [f"base={self.base}"]
        for layer in self.layers:
            if layer[0] == "rational":
                lines.append(f"layer rational {layer[1]}")
            else:
                lines.append(f"layer pinsep {layer[1]} {layer[2]}")
        for name, src in self.delta.items():
            lines.append(f"delta {name} = {src}")
        for name, value in self.options.items():
            lines.append(f"option {name} = {value}")
        for name, src in self.bindings.items():
            lines.append(f"{name} = {src}")
        return "\n".join(lines) + "\n"


def parse_ore(tower, src, env=None, line=1):
    """Ore polynomial from an expression over t, generators and env."""
    env = env or {}
    gen_names = {name for _, name in tower.layer_kinds}

    def lookup(name, ln, col):
        if name == "t":
            return OrePoly.t(tower)
        if name in gen_names:
            return OrePoly.constant(tower, tower.gen(name))
        if name in env:
            return env[name]
        raise SessionSyntaxError(ln, col, f"known name (got {name!r})")

    def from_int(n):
        return OrePoly.constant(tower, tower.from_int(n))

    return parse_expr(src, lookup, from_int, line=line)


class _AnyValue:
    """Absorbing value for syntax-only expression checks."""

    def _same(self, *_):
        return self

    __add__ = __radd__ = __sub__ = __rsub__ = _same
    __mul__ = __rmul__ = __truediv__ = __rtruediv__ = _same
    __pow__ = __neg__ = _same


_ANY = _AnyValue()


def _syntax_check(src, lineno):
    """Raise SessionSyntaxError on malformed expressions, located at the
    source line (columns are relative to the expression text)."""
    parse_expr(src, lambda name, ln, col: _ANY, lambda n: _ANY, line=lineno)


def _split_eq(body, lineno, offset):
    if "=" not in body:
        raise SessionSyntaxError(lineno, offset, "'='")
    key, _, value = body.partition("=")
    return key.strip(), value.strip()


def parse_session(text):
    session = SessionFile(base=None)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        words = stripped.split()
        if stripped.startswith("base"):
            _, value = _split_eq(stripped, lineno, col)
            if value != "Q" and not (value.startswith("F")
                                     and value[1:].isdigit()):
                raise SessionSyntaxError(lineno, col,
                                         "'Q' or 'F<p>' after base=")
            session.base = value
        elif words[0] == "layer":
            if len(words) >= 3 and words[1] == "rational":
                session.layers.append(("rational", words[2]))
            elif len(words) >= 4 and words[1] == "pinsep":
                alpha_src = " ".join(words[3:])
                _syntax_check(alpha_src, lineno)
                session.layers.append(("pinsep", words[2], alpha_src))
            else:
                raise SessionSyntaxError(
                    lineno, col, "'layer rational <name>' or "
                                 "'layer pinsep <name> <expr>'")
        elif words[0] == "delta":
            rest = stripped[len("delta"):].strip()
            key, value = _split_eq(rest, lineno, col)
            _syntax_check(value, lineno)
            session.delta[key] = value
        elif words[0] == "option":
            rest = stripped[len("option"):].strip()
            key, value = _split_eq(rest, lineno, col)
            session.options[key] = value
        else:
            key, value = _split_eq(stripped, lineno, col)
            if not key.isidentifier():
                raise SessionSyntaxError(lineno, col, "binding name")
            _syntax_check(value, lineno)
            session.bindings[key] = value
            session.binding_lines[key] = lineno
    if session.base is None:
        session.base = "Q"
    if session.base == "Q":
        for layer in session.layers:
            if layer[0] == "pinsep":
                raise SessionTypeError(
                    "inseparable layers need prime characteristic")
    return session
