"""Group definition files.

A definition is a JSON document with exactly one of two group sections and
optional options::

    {"named": {"type": "B", "rank": 3}}
    {"named": {"type": "I2(5)"}}
    {"explicit": {"field": "Q(sqrt 5)",
                  "gram": [["2", "-1/2-1/2r"], ["-1/2-1/2r", "2"]],
                  "generators": [["1", "0"], ["0", "1"]]},
     "options": {"order_cap": 100000, "expansion_degree": 60}}

Scalars are strings such as ``"-3/2"`` or ``"1+2r"`` (``r`` is the square
root of the field's ``d``); plain JSON integers are accepted too.
"""

import json
from dataclasses import dataclass, replace

from .coxeter import named_weyl, parse_type, type_label
from .errors import IsotropicGenerator, SingularGram, SpecParseError, UnknownType
from .field import Field
from .groups import DEFAULT_CAP, close_group, reflection
from .linalg import BilinearSpace, det, dot, mat_vec

__all__ = ["GroupSpec", "parse_group_spec", "load_group_spec", "serialize_group_spec", "build_group"]

_OPTION_KEYS = {"order_cap", "expansion_degree"}


@dataclass(frozen=True)
class GroupSpec:
    kind: str                     # "named" or "explicit"
    type: str = None
    rank: int = None
    m: int = None
    field_name: str = "Q"
    gram: tuple = ()
    generators: tuple = ()
    order_cap: int = DEFAULT_CAP
    expansion_degree: int = None

    @property
    def label(self):
        if self.kind == "named":
            return type_label(self.type, self.rank, self.m)
        return f"explicit rank {len(self.generators)} over {self.field_name}"

    def space_and_generators(self):
        if self.kind == "named":
            return named_weyl(self.type, self.rank, self.m)
        space = BilinearSpace(self.gram)
        return space, [reflection(space, v) for v in self.generators]

    def with_options(self, order_cap=None, expansion_degree=None):
        kw = {}
        if order_cap is not None:
            kw["order_cap"] = order_cap
        if expansion_degree is not None:
            kw["expansion_degree"] = expansion_degree
        return replace(self, **kw)


def _line_of(text, needle):
    """1-based line of the first occurrence of ``needle`` in ``text``, if any."""
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def _positive_int(value, name, text):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise SpecParseError(f"{name} must be a positive integer, got {value!r}",
                             field=name, line=_line_of(text, f'"{name.split(".")[-1]}"'))
    return value


def _scalar(F, raw, where, text):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise SpecParseError(f"expected a string or integer scalar, got {raw!r}", field=where)
    try:
        return F.parse(str(raw))
    except SpecParseError as exc:
        raise SpecParseError(exc.reason, field=where,
                             line=_line_of(text, f'"{raw}"') if isinstance(raw, str) else None) from None


def _matrix(F, raw, name, text, width=None):
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise SpecParseError(f"{name} must be a non-empty list of lists", field=name,
                             line=_line_of(text, f'"{name.split(".")[-1]}"'))
    rows = []
    for i, r in enumerate(raw):
        if width is not None and len(r) != width:
            raise SpecParseError(f"row has {len(r)} entries, expected {width}", field=f"{name}[{i}]",
                                 line=_line_of(text, f'"{name.split(".")[-1]}"'))
        rows.append(tuple(_scalar(F, x, f"{name}[{i}][{j}]", text) for j, x in enumerate(r)))
    return tuple(rows)


def parse_group_spec(text):
    """Parse and validate a group definition document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise SpecParseError("the document must be a JSON object", line=1)
    unknown = set(doc) - {"named", "explicit", "options"}
    if unknown:
        key = sorted(unknown)[0]
        raise SpecParseError(f"unknown section {key!r}", field=key, line=_line_of(text, f'"{key}"'))
    sections = [k for k in ("named", "explicit") if k in doc]
    if len(sections) != 1:
        raise SpecParseError("exactly one of 'named' or 'explicit' is required", line=1)

    opts = doc.get("options", {})
    if not isinstance(opts, dict):
        raise SpecParseError("options must be an object", field="options", line=_line_of(text, '"options"'))
    bad = set(opts) - _OPTION_KEYS
    if bad:
        key = sorted(bad)[0]
        raise SpecParseError(f"unknown option {key!r}", field=f"options.{key}", line=_line_of(text, f'"{key}"'))
    options = {}
    if "order_cap" in opts:
        options["order_cap"] = _positive_int(opts["order_cap"], "options.order_cap", text)
    if "expansion_degree" in opts:
        options["expansion_degree"] = _positive_int(opts["expansion_degree"], "options.expansion_degree", text)

    kind = sections[0]
    body = doc[kind]
    if not isinstance(body, dict):
        raise SpecParseError(f"{kind} must be an object", field=kind, line=_line_of(text, f'"{kind}"'))

    if kind == "named":
        unknown = set(body) - {"type", "rank", "m"}
        if unknown:
            key = sorted(unknown)[0]
            raise SpecParseError(f"unknown key {key!r}", field=f"named.{key}", line=_line_of(text, f'"{key}"'))
        if "type" not in body:
            raise SpecParseError("missing type", field="named.type", line=_line_of(text, '"named"'))
        rank = body.get("rank")
        if rank is not None:
            rank = _positive_int(rank, "named.rank", text)
        m = body.get("m")
        if m is not None:
            m = _positive_int(m, "named.m", text)
        try:
            letter, rank, m = parse_type(body["type"], rank, m)
            named_weyl(letter, rank, m)
        except UnknownType as exc:
            raise SpecParseError(str(exc), field="named.type", line=_line_of(text, '"type"')) from None
        return GroupSpec("named", type=letter, rank=rank, m=m, **options)

    unknown = set(body) - {"field", "gram", "generators"}
    if unknown:
        key = sorted(unknown)[0]
        raise SpecParseError(f"unknown key {key!r}", field=f"explicit.{key}", line=_line_of(text, f'"{key}"'))
    for key in ("gram", "generators"):
        if key not in body:
            raise SpecParseError(f"missing {key}", field=f"explicit.{key}", line=_line_of(text, '"explicit"'))
    fname = body.get("field", "Q")
    if not isinstance(fname, str):
        raise SpecParseError("field must be a string", field="explicit.field", line=_line_of(text, '"field"'))
    try:
        F = Field.from_name(fname)
    except SpecParseError as exc:
        raise SpecParseError(exc.reason, field="explicit.field",
                             line=_line_of(text, '"field"')) from None
    gram = _matrix(F, body["gram"], "explicit.gram", text)
    n = len(gram)
    if any(len(r) != n for r in gram):
        raise SpecParseError("gram must be square", field="explicit.gram", line=_line_of(text, '"gram"'))
    if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
        raise SpecParseError("gram must be symmetric", field="explicit.gram", line=_line_of(text, '"gram"'))
    if not det(gram):
        raise SingularGram("gram matrix is singular (determinant 0)", field="explicit.gram",
                           line=_line_of(text, '"gram"'))
    gens = _matrix(F, body["generators"], "explicit.generators", text, width=n)
    for i, v in enumerate(gens):
        if not dot(v, mat_vec(gram, v)):
            raise IsotropicGenerator(f"generator {i} is isotropic: b(v, v) = 0",
                                     field=f"explicit.generators[{i}]", line=_line_of(text, '"generators"'))
    return GroupSpec("explicit", field_name=F.name, gram=gram, generators=gens, **options)


def load_group_spec(path):
    with open(path, encoding="utf-8") as fh:
        return parse_group_spec(fh.read())


def _spec_document(spec):
    if spec.kind == "named":
        named = {"type": "I2" if spec.type == "I" else spec.type}
        if spec.type == "I":
            named["m"] = spec.m
        else:
            named["rank"] = spec.rank
        doc = {"named": named}
    else:
        doc = {"explicit": {
            "field": spec.field_name,
            "gram": [[str(x) for x in row] for row in spec.gram],
            "generators": [[str(x) for x in v] for v in spec.generators],
        }}
    options = {}
    if spec.order_cap != DEFAULT_CAP:
        options["order_cap"] = spec.order_cap
    if spec.expansion_degree is not None:
        options["expansion_degree"] = spec.expansion_degree
    if options:
        doc["options"] = options
    return doc


def serialize_group_spec(spec):
    """Canonical JSON text; ``parse_group_spec`` of it gives back an equal spec."""
    return json.dumps(_spec_document(spec), sort_keys=True, indent=2) + "\n"


def build_group(spec):
    """Close the group described by ``spec`` (honours ``order_cap``)."""
    space, gens = spec.space_and_generators()
    return close_group(space, gens, spec.order_cap)


def describe(spec):
    """A JSON-ready summary of the group definition itself."""
    return _spec_document(spec)

