import jsonschema
import pytest
from referencing import Registry, Resource

from treespectrum.spectrum_lab import load_schema


@pytest.fixture(scope="session")
def schema_validator():
    schemas = {name: load_schema(name) for name in ("verify", "spectrum")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )

    def validate(doc, name):
        jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)

    return validate


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome, props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome, detail in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}  {detail}")
