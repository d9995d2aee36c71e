"""Small finite posets with Hasse-diagram and JSON export."""
from __future__ import annotations

import hashlib
import json


def fingerprint(obj) -> str:
    """Stable 10-hex-digit label for a canonical (JSON-able) object."""
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha1(text.encode()).hexdigest()[:10]


class Poset:
    """A finite poset over externally supplied nodes.

    Nodes are sorted by `key(node)`; `leq(a, b)` decides the order.
    """

    def __init__(self, nodes, leq, key):
        self.nodes = sorted(nodes, key=key)
        self.keys = [key(n) for n in self.nodes]
        n = len(self.nodes)
        self.le = tuple(tuple(bool(leq(self.nodes[i], self.nodes[j]))
                              for j in range(n)) for i in range(n))

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def index(self, node) -> int:
        return self.nodes.index(node)

    def covers(self) -> list:
        """Covering pairs (i, j) with node_i < node_j and nothing between."""
        n = len(self.nodes)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.le[i][j]:
                    continue
                if any(k not in (i, j) and self.le[i][k] and self.le[k][j]
                       for k in range(n)):
                    continue
                out.append((i, j))
        return out

    def down_set(self, i: int) -> frozenset:
        return frozenset(j for j in range(len(self.nodes)) if self.le[j][i])

    def minimal(self) -> list:
        n = len(self.nodes)
        return [i for i in range(n)
                if not any(self.le[j][i] for j in range(n) if j != i)]

    def maximal(self) -> list:
        n = len(self.nodes)
        return [i for i in range(n)
                if not any(self.le[i][j] for j in range(n) if j != i)]

    def is_isomorphic_via(self, other: "Poset", pairing) -> bool:
        """Order isomorphism along an explicit node pairing i -> pairing[i]."""
        n = len(self.nodes)
        if n != len(other.nodes) or sorted(pairing) != list(range(n)):
            return False
        return all(self.le[i][j] == other.le[pairing[i]][pairing[j]]
                   for i in range(n) for j in range(n))

    def labels(self) -> list:
        return [fingerprint(k) for k in self.keys]

    def to_json(self) -> str:
        data = {"nodes": [{"label": lab, "key": key}
                          for lab, key in zip(self.labels(), self.keys)],
                "leq": [[int(v) for v in row] for row in self.le]}
        return json.dumps(data, sort_keys=True, separators=(",", ":"), default=str)

    def to_dot(self, name: str = "poset") -> str:
        """Hasse diagram: edges are covering relations only."""
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels()):
            lines.append(f'  n{i} [label="{lab}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
