import json

import pytest
from click.testing import CliRunner

from glmp.cli import main

STRICT_NULL_DOC = """\
{
 "video_id": "partial",
 "measures": {"gaze": null}
}
"""

CYCLIC_MODEL = json.dumps({
    "name": "cyclic",
    "measures": [
        {"id": "m1", "modality": "audio", "kind": "numeric", "range": [0, 10]},
    ],
    "nodes": [
        {"id": "A", "level": 2, "name": "a", "aggregator": "weighted-average",
         "inputs": ["B", "B"], "weights": [0.5, 0.5],
         "output_labels": ["low", "medium", "high"]},
        {"id": "B", "level": 2, "name": "b", "aggregator": "weighted-average",
         "inputs": ["A", "A"], "weights": [0.5, 0.5],
         "output_labels": ["low", "medium", "high"]},
        {"id": "R", "level": 5, "name": "r", "aggregator": "choquet-pipeline",
         "inputs": ["A", "B"], "behaviours": {"A": "openness", "B": "neuroticism"}},
    ],
    "score_partition": {
        "labels": ["low", "medium", "high"],
        "functions": [
            {"shape": "trapezoidal", "params": [0, 0, 2.5, 5]},
            {"shape": "triangular", "params": [2.5, 5, 7.5]},
            {"shape": "trapezoidal", "params": [5, 7.5, 10, 10]},
        ],
        "universe": [0, 10],
    },
    "capacity": {"ground": ["a"], "values": {"": 0.0, "a": 1.0}},
    "profile_sets": {"a": {"shape": "triangular", "params": [0, 5, 10]}},
    "suspicion_sets": {
        "partition": {
            "labels": ["Low", "Medium", "High"],
            "functions": [
                {"shape": "trapezoidal", "params": [0, 0, 0.25, 0.5]},
                {"shape": "triangular", "params": [0.25, 0.5, 0.75]},
                {"shape": "trapezoidal", "params": [0.5, 0.75, 1, 1]},
            ],
            "universe": [0, 1],
        },
    },
})


@pytest.fixture
def runner():
    return CliRunner()


class TestValidate:
    def test_default_model_ok(self, runner):
        result = runner.invoke(main, ["validate"])
        assert result.exit_code == 0
        assert result.output.strip() == "43 nodes (22/10/5/5/1)"

    def test_invalid_model_lists_issues(self, runner, tmp_path):
        path = tmp_path / "cyclic.json"
        path.write_text(CYCLIC_MODEL)
        result = runner.invoke(main, ["validate", "--model", str(path)])
        assert result.exit_code == 1
        assert "cycle" in result.stderr

    def test_missing_model_file_is_io_error(self, runner):
        result = runner.invoke(main, ["validate", "--model", "/nope/model.json"])
        assert result.exit_code == 2


class TestAssess:
    def test_text_output(self, runner, fixtures_dir):
        result = runner.invoke(main, ["assess", str(fixtures_dir / "video1.measures.json")])
        assert result.exit_code == 0
        assert "Suspicion of disinformation: Medium (value 0.473)" in result.output
        assert "Extroversion is medium." in result.output

    def test_json_output_fields(self, runner, fixtures_dir):
        result = runner.invoke(main, [
            "assess", str(fixtures_dir / "video1.measures.json"),
            "--format", "json", "--no-meta"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["video_id"] == "video1"
        assert data["suspicion"]["reported_label"] == "Medium"
        assert set(data["behaviour_scores"]) == {
            "agreeableness", "conscientiousness", "extroversion", "neuroticism", "openness"}
        assert data["tree"]["id"] == "5PM_43"

    def test_no_meta_output_is_deterministic(self, runner, fixtures_dir):
        args = ["assess", str(fixtures_dir / "video1.measures.json"),
                "--format", "json", "--no-meta"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output

    def test_prompt_format(self, runner, fixtures_dir):
        result = runner.invoke(main, [
            "assess", str(fixtures_dir / "video1.measures.json"), "--format", "prompt"])
        assert result.exit_code == 0
        assert "Generate a comprehensive report" in result.output

    def test_strict_policy_names_missing_measure(self, runner, tmp_path):
        path = tmp_path / "partial.measures.json"
        path.write_text(STRICT_NULL_DOC)
        result = runner.invoke(main, ["assess", str(path), "--policy", "strict"])
        assert result.exit_code == 1
        assert "gaze" in result.stderr or "1PM" in result.stderr

    def test_renormalize_policy_warns_but_succeeds(self, runner, tmp_path):
        path = tmp_path / "partial.measures.json"
        path.write_text(STRICT_NULL_DOC)
        result = runner.invoke(main, ["assess", str(path)])
        assert result.exit_code == 0
        assert "warning:" in result.stderr

    def test_missing_input_is_io_error(self, runner):
        result = runner.invoke(main, ["assess", "/nope/video.measures.json"])
        assert result.exit_code == 2

    def test_enhance_without_endpoint_degrades(self, runner, fixtures_dir):
        result = runner.invoke(main, [
            "assess", str(fixtures_dir / "video1.measures.json"), "--enhance"])
        assert result.exit_code == 0
        assert "The suspicion of disinformation is Medium." in result.output
        assert "not configured" in result.stderr


class TestBatch:
    def test_manifest_with_summary(self, runner, fixtures_dir, tmp_path):
        out = tmp_path / "results.jsonl"
        summary = tmp_path / "summary.json"
        result = runner.invoke(main, [
            "batch", str(fixtures_dir / "manifest.csv"),
            "--output", str(out), "--summary", str(summary), "--no-meta"])
        assert result.exit_code == 0
        lines = [json.loads(l) for l in out.read_text().splitlines()]
        assert len(lines) == 3
        assert [l["suspicion"]["reported_label"] for l in lines] == ["Medium", "Low", "High"]
        stats = json.loads(summary.read_text())
        assert stats["total"] == 3 and stats["failed"] == 0
        assert stats["histogram"] == {
            "Low": 1, "Low/Medium": 0, "Medium": 1, "Medium/High": 0, "High": 1}

    def test_directory_input(self, runner, fixtures_dir):
        result = runner.invoke(main, ["batch", str(fixtures_dir), "--no-meta"])
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 3

    def test_empty_manifest_fails(self, runner, tmp_path):
        manifest = tmp_path / "empty.csv"
        manifest.write_text("path\n")
        result = runner.invoke(main, ["batch", str(manifest)])
        assert result.exit_code == 1
        assert "no inputs" in result.stderr

    def test_bad_document_reported_not_fatal(self, runner, fixtures_dir, tmp_path):
        broken = tmp_path / "broken.measures.json"
        broken.write_text("{")
        manifest = tmp_path / "manifest.csv"
        manifest.write_text(f"{fixtures_dir / 'video1.measures.json'}\n{broken}\n")
        result = runner.invoke(main, ["batch", str(manifest), "--no-meta"])
        assert result.exit_code == 0
        lines = [json.loads(l) for l in result.stdout.splitlines()]
        assert "error" not in lines[0]
        assert "error" in lines[1]
        stats = json.loads(result.stderr)
        assert stats["succeeded"] == 1 and stats["failed"] == 1


class TestCalibrate:
    def test_prints_calibrated_parameters(self, runner):
        result = runner.invoke(main, ["calibrate"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["reference_value"] == pytest.approx(0.65, abs=0.02)
