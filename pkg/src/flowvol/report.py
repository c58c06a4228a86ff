"""Pass/fail reports with JSON and plain-table renderings."""
import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"


@dataclass
class Report:
    command: str
    items: list = field(default_factory=list)

    def add(self, passed, **fields):
        item = dict(fields)
        item["status"] = "pass" if passed else "fail"
        self.items.append(item)
        return item

    @property
    def summary(self):
        passed = sum(1 for it in self.items if it["status"] == "pass")
        return {"total": len(self.items), "passed": passed, "failed": len(self.items) - passed}

    @property
    def ok(self):
        return self.summary["failed"] == 0

    def failures(self):
        return [it for it in self.items if it["status"] != "pass"]

    def to_dict(self):
        return {"schema_version": SCHEMA_VERSION, "command": self.command,
                "items": self.items, "summary": self.summary}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_table(self):
        if not self.items:
            cols = ["status"]
        else:
            cols = list(self.items[0])
            cols.remove("status")
            cols.append("status")
        rows = [[str(it.get(c, "")) for c in cols] for it in self.items]
        widths = [max([len(c)] + [len(r[k]) for r in rows]) for k, c in enumerate(cols)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        lines.append("  ".join("-" * w for w in widths))
        lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
        s = self.summary
        lines.append(f"# {self.command}: {s['passed']}/{s['total']} passed, {s['failed']} failed")
        return "\n".join(line.rstrip() for line in lines) + "\n"
