import pytest

from refltk.errors import IsotropicGenerator, SingularGram, SpecParseError
from refltk.spec_io import build_group, parse_group_spec, serialize_group_spec


def test_named():
    spec = parse_group_spec('{"named":{"type":"A","rank":2}}')
    assert (spec.kind, spec.type, spec.rank) == ("named", "A", 2)
    assert build_group(spec).order == 6


def test_named_dihedral():
    spec = parse_group_spec('{"named": {"type": "I2(5)"}}')
    assert build_group(spec).order == 10


def test_explicit_rank_one_generated():
    spec = parse_group_spec('{"explicit": {"gram": [[1,0],[0,1]], "generators": [[1,0]]}}')
    assert spec.kind == "explicit" and len(spec.generators) == 1
    assert build_group(spec).order == 2


def test_explicit_quadratic_field():
    text = '''{"explicit": {"field": "Q(sqrt 5)",
      "gram": [["2", "-1/2-1/2r"], ["-1/2-1/2r", "2"]],
      "generators": [["1", "0"], ["0", "1"]]}}'''
    spec = parse_group_spec(text)
    assert spec.gram[0][1].b != 0
    assert build_group(spec).order == 10


def test_singular_gram():
    with pytest.raises(SingularGram) as exc:
        parse_group_spec('{"explicit": {"gram": [[1,0],[0,0]], "generators": [[1,0]]}}')
    assert exc.value.code == "singular-gram" and exc.value.field == "explicit.gram"


def test_isotropic_generator():
    text = '{"explicit": {"gram": [[1,0],[0,-1]],\n "generators": [[1,1]]}}'
    with pytest.raises(IsotropicGenerator) as exc:
        parse_group_spec(text)
    assert exc.value.code == "isotropic-generator" and exc.value.line == 2


def test_error_codes_distinct():
    codes = {SpecParseError.code, SingularGram.code, IsotropicGenerator.code}
    assert len(codes) == 3


@pytest.mark.parametrize("text,field", [
    ('{"named": {"type": "A", "rank": 2}', None),
    ('[]', None),
    ('{"named": {"type": "Z", "rank": 2}}', "named.type"),
    ('{"named": {"type": "A", "rank": 0}}', "named.rank"),
    ('{"named": {"type": "A", "rank": 2}, "explicit": {}}', None),
    ('{"named": {"type": "A", "rank": 2}, "options": {"cap": 3}}', "options.cap"),
    ('{"explicit": {"gram": [["1/0"]], "generators": [["1"]]}}', "explicit.gram[0][0]"),
    ('{"explicit": {"gram": [[1,2],[3,1]], "generators": [[1,0]]}}', "explicit.gram"),
    ('{"explicit": {"gram": [[1,0],[0,1]], "generators": [[1]]}}', "explicit.generators[0]"),
    ('{"explicit": {"field": "Q(sqrt 4)", "gram": [[1]], "generators": [[1]]}}', "explicit.field"),
])
def test_parse_errors(text, field):
    with pytest.raises(SpecParseError) as exc:
        parse_group_spec(text)
    assert exc.value.code == "parse-error"
    assert exc.value.field == field


def test_line_diagnostic():
    text = '{\n  "named": {\n    "type": "A",\n    "rank": -1\n  }\n}'
    with pytest.raises(SpecParseError) as exc:
        parse_group_spec(text)
    assert exc.value.line == 4 and "line 4" in str(exc.value)


@pytest.mark.parametrize("text", [
    '{"named": {"type": "B", "rank": 3}}',
    '{"named": {"type": "I2(8)"}, "options": {"order_cap": 50, "expansion_degree": 30}}',
    '{"explicit": {"gram": [["2", "-1"], ["-1", "+2"]], "generators": [["1", "0"], [0, 1]]}}',
    '{"explicit": {"field": "Q(sqrt 5)", "gram": [["2", "-1/2-1/2r"], ["-1/2-1/2r", "2"]],'
    ' "generators": [["1", "0"], ["0", "1"]]}}',
])
def test_round_trip(text):
    spec = parse_group_spec(text)
    again = parse_group_spec(serialize_group_spec(spec))
    assert again == spec
    assert serialize_group_spec(again) == serialize_group_spec(spec)
