"""Top-level environment: checked definitions and the axiom registry."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import values as v


@dataclass(frozen=True)
class Config:
    max_level: int = 8
    eta_sigma: bool = True


@dataclass(frozen=True, slots=True)
class GlobalEntry:
    kind: str  # "def" | "axiom"
    name: str
    type_value: v.Value
    value: v.Value | None = None  # definitions only


@dataclass
class Globals:
    """Append-only registry of checked definitions and axioms.

    Axioms evaluate to opaque neutral heads; definitions unfold
    transparently to their cached value.
    """

    config: Config = field(default_factory=Config)
    entries: dict[str, GlobalEntry] = field(default_factory=dict)

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def lookup(self, name: str) -> GlobalEntry | None:
        return self.entries.get(name)

    def add_def(self, name: str, type_value: v.Value, value: v.Value) -> None:
        self.entries[name] = GlobalEntry("def", name, type_value, value)

    def add_axiom(self, name: str, type_value: v.Value) -> None:
        self.entries[name] = GlobalEntry("axiom", name, type_value)

    def value_of(self, name: str) -> v.Value:
        entry = self.entries[name]
        if entry.kind == "axiom":
            return v.VNeutral(v.VAxiom(name))
        assert entry.value is not None
        return entry.value

    def names(self) -> set[str]:
        return set(self.entries)
