from dataclasses import dataclass, field
from typing import List, Tuple


def format_path(path):
    return "root" if len(path) == 0 else "root." + ".".join(str(r) for r in path)


@dataclass(frozen=True)
class Violation:
    path: Tuple[int, ...]
    clause: str
    detail: str
    subset: Tuple[int, ...] = ()

    def __str__(self):
        text = f"[{format_path(self.path)}] {self.clause}: {self.detail}"
        if len(self.subset) > 0:
            text += " subset=" + " ".join(str(i) for i in self.subset)
        return text


@dataclass
class VerificationReport:
    """
    Outcome of a structural or counterexample check. Violations are content,
    not errors.
    """

    name: str
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self):
        return len(self.violations) == 0

    def add(self, path, clause, detail, subset=()):
        self.violations.append(Violation(tuple(path), clause, detail, tuple(subset)))

    def lines(self):
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return [f"{self.name}: {status} ({self.checked} checks)"] + [f"  {v}" for v in self.violations]
