import dataclasses

import pytest

import glmp.report as report_mod
from glmp.model import assess
from glmp.report import (
    CompletionClient,
    PromptConfig,
    ServiceError,
    enhance_report,
    generate_prompt,
    render_report,
)

EXTROVERSION_BOX = """\
Extroversion is medium. Extroversion depends on energy and assertiveness.
  - Energy is medium. Energy depends on speech fluency and expressiveness.
    - Speech fluency is high. Speech fluency depends on fluency and speech speed.
      - Fluency is high.
      - Speech speed is high.
    - Expressiveness is low. Expressiveness depends on mood and serenity.
      - Mood is reading.
      - Serenity is medium.
  - Assertiveness is high. Assertiveness depends on confidence and conviction.
    - Confidence is high. Confidence depends on voice uniformity and constancy in expressing ideas.
      - Voice uniformity is medium/high.
      - Constancy in expressing ideas is high.
    - Conviction is high. Conviction depends on congruence and concreteness.
      - Congruence is medium/high.
      - Concreteness is high.
"""


@pytest.fixture(scope="module")
def assessment(model, worked_example):
    return assess(model, worked_example)


class TestRenderReport:
    def test_extroversion_subtree_golden(self, model, assessment):
        got = render_report(model, assessment.tree, depth=4, root_id="4PM_40")
        assert got == EXTROVERSION_BOX

    def test_depth_one_is_single_sentence(self, model, assessment):
        got = render_report(model, assessment.tree, depth=1)
        assert got == "The suspicion of disinformation is Medium.\n"

    def test_each_line_carries_the_tree_label(self, model, assessment):
        text = render_report(model, assessment.tree, depth=5)
        for tn in assessment.tree.walk():
            label = tn.reported_label(model.report_tau)
            assert f"is {label}." in text or f"is {label}. " in text

    def test_deeper_reports_strictly_grow(self, model, assessment):
        lengths = [len(render_report(model, assessment.tree, depth=d)) for d in range(1, 6)]
        assert lengths == sorted(lengths)
        assert len(set(lengths)) == 5

    def test_bad_depth_rejected(self, model, assessment):
        with pytest.raises(ValueError):
            render_report(model, assessment.tree, depth=0)

    def test_unknown_root_rejected(self, model, assessment):
        with pytest.raises(KeyError):
            render_report(model, assessment.tree, root_id="9PM_1")


class TestGeneratePrompt:
    def test_header_carries_label_and_value(self, model, assessment):
        # suspicion swapped for the published high-scoring profile result
        high = model.suspicion_sets.label(0.655)
        a = dataclasses.replace(assessment, suspicion=high)
        prompt = generate_prompt(model, a)
        assert "High" in prompt.text
        assert "0.65" in prompt.text
        assert "using precise language" in prompt.text

    def test_shrinks_depth_to_fit(self, model, assessment):
        full = generate_prompt(model, assessment)
        small = generate_prompt(model, assessment, PromptConfig(max_chars=600))
        assert len(full.text) > 600
        assert len(small.text) <= 600
        assert small.report.count("\n") < full.report.count("\n")

    def test_depth_one_floor_even_when_oversized(self, model, assessment):
        prompt = generate_prompt(model, assessment, PromptConfig(max_chars=10))
        assert "The suspicion of disinformation is" in prompt.report

    def test_warning_clause_optional(self, model, assessment):
        plain = generate_prompt(model, assessment)
        warned = generate_prompt(model, assessment, PromptConfig(include_warnings=True))
        assert "limitations" not in plain.text
        assert "limitations" in warned.text


class FakeResponse:
    def __init__(self, status=200, body=None):
        self.status = status
        self.body = body if body is not None else {}

    def raise_for_status(self):
        if self.status >= 400:
            raise RuntimeError(f"HTTP {self.status}")

    def json(self):
        return self.body


class TestEnhance:
    def test_unconfigured_client_degrades(self, model, assessment, monkeypatch):
        monkeypatch.delenv("GLMP_SERVICE_TOKEN", raising=False)
        prompt = generate_prompt(model, assessment)
        out = enhance_report(prompt, CompletionClient(endpoint="https://svc.example/v1"))
        assert not out.enhanced
        assert out.text == prompt.report
        assert any("not configured" in w for w in out.warnings)

    def test_success_returns_service_text(self, model, assessment, monkeypatch):
        captured = {}

        def fake_post(url, json=None, headers=None, timeout=None):
            captured["url"] = url
            captured["prompt"] = json["prompt"]
            captured["auth"] = headers["Authorization"]
            return FakeResponse(body={"text": "rewritten"})

        monkeypatch.setattr(report_mod.requests, "post", fake_post)
        prompt = generate_prompt(model, assessment)
        client = CompletionClient("https://svc.example/v1", token="tok")
        out = enhance_report(prompt, client)
        assert out.enhanced
        assert out.text == "rewritten"
        assert captured["url"] == "https://svc.example/v1"
        assert captured["auth"] == "Bearer tok"
        assert "suspicion of disinformation" in captured["prompt"].lower()

    def test_server_error_degrades_with_warning(self, model, assessment, monkeypatch):
        monkeypatch.setattr(report_mod.requests, "post",
                            lambda *a, **k: FakeResponse(status=500))
        prompt = generate_prompt(model, assessment)
        client = CompletionClient("https://svc.example/v1", token="tok")
        out = enhance_report(prompt, client)
        assert not out.enhanced
        assert out.text == prompt.report
        assert any("failed" in w for w in out.warnings)

    def test_missing_text_field_degrades(self, model, assessment, monkeypatch):
        monkeypatch.setattr(report_mod.requests, "post",
                            lambda *a, **k: FakeResponse(body={"oops": 1}))
        prompt = generate_prompt(model, assessment)
        client = CompletionClient("https://svc.example/v1", token="tok")
        out = enhance_report(prompt, client)
        assert not out.enhanced

    def test_token_read_from_environment(self, monkeypatch):
        monkeypatch.setenv("GLMP_SERVICE_TOKEN", "env-tok")
        client = CompletionClient("https://svc.example/v1")
        assert client.configured
        assert client.token == "env-tok"

    def test_complete_raises_when_unconfigured(self):
        client = CompletionClient(endpoint="", token=None)
        with pytest.raises(ServiceError):
            client.complete("hi")
