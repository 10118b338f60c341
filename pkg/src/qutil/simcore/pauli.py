"""Weighted Pauli-word sums and their text interchange format.

Text format: one term per line, "coefficient word", e.g. "-1.0 ZZ".
Blank lines and lines starting with '#' are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass

_LETTERS = frozenset("IXYZ")


@dataclass(frozen=True)
class PauliSum:
    num_qubits: int
    terms: tuple[tuple[float, str], ...]

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")
        merged: dict[str, float] = {}
        order: list[str] = []
        for coeff, word in self.terms:
            if len(word) != self.num_qubits:
                raise ValueError(
                    f"word {word!r} has length {len(word)}, expected {self.num_qubits}"
                )
            if not set(word) <= _LETTERS:
                raise ValueError(f"word {word!r} contains non-Pauli letters")
            if word not in merged:
                merged[word] = 0.0
                order.append(word)
            merged[word] += float(coeff)
        object.__setattr__(
            self, "terms", tuple((merged[w], w) for w in order)
        )

    def __len__(self) -> int:
        return len(self.terms)


def paulisum_from_text(text: str) -> PauliSum:
    terms = []
    num_qubits = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'coefficient word', got {line!r}")
        coeff, word = float(parts[0]), parts[1]
        if num_qubits is None:
            num_qubits = len(word)
        terms.append((coeff, word))
    if num_qubits is None:
        raise ValueError("no terms found")
    return PauliSum(num_qubits, tuple(terms))


def paulisum_to_text(h: PauliSum) -> str:
    return "\n".join(f"{coeff!r} {word}" for coeff, word in h.terms) + "\n"
