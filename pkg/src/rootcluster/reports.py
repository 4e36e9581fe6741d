"""Report serialization: canonical JSON, input fingerprints and text tables"""
import dataclasses
import hashlib
import json
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from jinja2 import Environment

from .permcore import Group, Permutation, Subgroup

FINGERPRINT_LENGTH = 16

_env = Environment(trim_blocks=True, lstrip_blocks=True, autoescape=False)
_env.filters["pad"] = lambda value, width: str(value).ljust(width)

REPORT_TEMPLATE = _env.from_string("""{{ title }}
{{ "=" * 60 }}
{% for key, value in rows %}
{{ key | pad(width) }}  {{ value }}
{% endfor %}
{% for section in sections %}

{{ section.title }}
{{ "-" * 60 }}
{% if section.header %}
{% for cell in section.header %}{{ cell | pad(section.widths[loop.index0]) }}  {% endfor %}

{% endif %}
{% for row in section.rows %}
{% for cell in row %}{{ cell | pad(section.widths[loop.index0]) }}  {% endfor %}

{% endfor %}
{% endfor %}
""")


@dataclasses.dataclass
class Section:
    """Multi-column block inside a text report"""

    title: str
    header: Sequence[str]
    rows: List[Sequence[Any]]

    @property
    def widths(self) -> List[int]:
        lines = [list(r) for r in self.rows]
        if self.header:
            lines.append(list(self.header))
        count = max((len(line) for line in lines), default=0)
        return [
            max((len(str(line[i])) for line in lines if i < len(line)), default=0)
            for i in range(count)
        ]


def to_jsonable(obj: Any) -> Any:
    """Convert reports and kernel objects into plain JSON values"""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, Permutation):
        return obj.to_list()
    if isinstance(obj, Subgroup):
        return {"order": obj.order, "generators": [g.to_list() for g in obj.generators]}
    if isinstance(obj, Group):
        return {
            "degree": obj.degree,
            "order": obj.order,
            "generators": [g.to_list() for g in obj.generators],
        }
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise TypeError(f"Cannot serialize {type(obj).__name__}")


def dumps(report: Any) -> str:
    """Stable JSON: sorted keys, two-space indent; re-serializing the parsed output is byte-identical"""
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True, ensure_ascii=False)


def fingerprint(*parts: Any) -> str:
    """Short SHA-256 digest of the canonical serialization of the inputs"""
    payload = json.dumps(to_jsonable(list(parts)), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:FINGERPRINT_LENGTH]


def render_table(
    title: str,
    rows: Iterable[Tuple[str, Any]],
    sections: Optional[Sequence[Section]] = None,
) -> str:
    rows = [(str(k), _cell(v)) for k, v in rows]
    width = max((len(k) for k, _ in rows), default=0)
    prepared = [
        Section(s.title, [str(h) for h in s.header], [[_cell(c) for c in row] for row in s.rows])
        for s in (sections or [])
    ]
    text = REPORT_TEMPLATE.render(title=title, rows=rows, width=width, sections=prepared)
    return "\n".join(line.rstrip() for line in text.splitlines())


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value) if value else "-"
    if isinstance(value, Subgroup):
        return f"order {value.order}"
    if value is None:
        return "-"
    return str(value)
