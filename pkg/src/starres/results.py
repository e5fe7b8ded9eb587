from dataclasses import dataclass, field


@dataclass
class Check:
    """Outcome of a verification. Truthy iff it passed."""

    name: str
    ok: bool
    detail: str = ""
    data: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail, "data": self.data}
