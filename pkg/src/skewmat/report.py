"""Pass/fail reports shared by every axiom checker."""

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    tested: int = 0
    violations: int = 0
    witness: object = None

    @property
    def ok(self):
        return self.violations == 0


@dataclass
class Report:
    """Ordered collection of named checks.

    Each check counts how many instances were tested and how many failed,
    and keeps the first failing instance as a witness.
    """

    title: str = ""
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def declare(self, name):
        if name not in self.checks:
            self.checks[name] = Check(name)
        return self.checks[name]

    def record(self, name, ok, witness=None):
        check = self.declare(name)
        check.tested += 1
        if not ok:
            check.violations += 1
            if check.witness is None:
                check.witness = witness
        return ok

    def note(self, text):
        self.notes.append(text)

    def passed(self, name):
        return self.checks[name].ok

    @property
    def ok(self):
        return all(c.ok for c in self.checks.values())

    def failures(self):
        return [c for c in self.checks.values() if not c.ok]

    def counts(self):
        return {c.name: c.violations for c in self.checks.values()}

    def merge(self, other, prefix=""):
        for c in other.checks.values():
            mine = self.declare(prefix + c.name)
            mine.tested += c.tested
            mine.violations += c.violations
            if mine.witness is None:
                mine.witness = c.witness
        self.notes.extend(other.notes)
        return self

    def lines(self):
        out = []
        for c in self.checks.values():
            if c.ok:
                out.append(f"PASS {c.name} ({c.tested} checked)")
            else:
                out.append(f"FAIL {c.name} ({c.violations}/{c.tested} violated) witness: {c.witness}")
        out.extend(f"INFO {n}" for n in self.notes)
        return out

    def __str__(self):
        head = [self.title] if self.title else []
        return "\n".join(head + self.lines())
