import numpy as np
import pytest

from treewire import read_report
from treewire.cli import run


@pytest.fixture
def workspace(tmp_path, rng):
    points = rng.random((30, 2))
    points_file = tmp_path / "points.txt"
    points_file.write_text("".join(f"{float(x)!r} {float(y)!r}\n" for x, y in points))
    return tmp_path, points_file


def read(path):
    return path.read_text()


def test_triangulate_then_rewire_then_stats(workspace, capsys):
    tmp_path, points_file = workspace
    edges_file = tmp_path / "mesh.edges"
    assert run(["triangulate", str(points_file), "-o", str(edges_file)]) == 0
    assert all(line.endswith(" M") for line in read(edges_file).splitlines())

    rewired_file = tmp_path / "rewired.edges"
    assert run(["rewire", str(points_file), str(edges_file),
                "--levels", "4", "--merge-exponent", "2",
                "-o", str(rewired_file)]) == 0
    tags = {line.split()[2] for line in read(rewired_file).splitlines()}
    assert tags == {"M", "T"}

    report_file = tmp_path / "report.json"
    assert run(["stats", str(points_file), str(rewired_file),
                "--diameter", "exact", "-o", str(report_file)]) == 0
    report = read_report(report_file)
    assert report["component_count"] == 1
    assert isinstance(report["hop_diameter"], int)
    capsys.readouterr()


def test_stdout_matches_file_output(workspace, capsys):
    tmp_path, points_file = workspace
    edges_file = tmp_path / "mesh.edges"
    run(["triangulate", str(points_file), "-o", str(edges_file)])
    capsys.readouterr()
    assert run(["triangulate", str(points_file), "-o", "-"]) == 0
    assert capsys.readouterr().out == read(edges_file)


@pytest.mark.parametrize("command", ["rewire", "stats", "density"])
def test_stdout_matches_file_for_every_subcommand(workspace, capsys, command):
    tmp_path, points_file = workspace
    edges_file = tmp_path / "mesh.edges"
    run(["triangulate", str(points_file), "-o", str(edges_file)])
    argv = {
        "rewire": ["rewire", str(points_file), str(edges_file), "--levels", "3"],
        "stats": ["stats", str(points_file), str(edges_file)],
        "density": ["density", str(points_file), "--grid", "8"],
    }[command]
    out_file = tmp_path / "out.txt"
    assert run([*argv, "-o", str(out_file)]) == 0
    capsys.readouterr()
    assert run([*argv, "-o", "-"]) == 0
    assert capsys.readouterr().out == out_file.read_text()


def test_reruns_byte_identical(workspace):
    tmp_path, points_file = workspace
    edges_file = tmp_path / "mesh.edges"
    run(["triangulate", str(points_file), "-o", str(edges_file)])
    out1, out2 = tmp_path / "a.edges", tmp_path / "b.edges"
    for out in (out1, out2):
        assert run(["rewire", str(points_file), str(edges_file),
                    "--levels", "5", "-o", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_pool_writes_stage_files(workspace, capsys):
    tmp_path, points_file = workspace
    edges_file = tmp_path / "mesh.edges"
    run(["triangulate", str(points_file), "-o", str(edges_file)])
    prefix = tmp_path / "pyr"
    assert run(["pool", str(points_file), str(edges_file),
                "--stages", "3", "-o", str(prefix)]) == 0
    stage1_edges = tmp_path / "pyr_stage1.edges"
    stage1_map = tmp_path / "pyr_stage1.map"
    assert stage1_edges.exists() and stage1_map.exists()
    mapping = np.array([[int(t) for t in line.split()]
                        for line in read(stage1_map).splitlines()])
    assert mapping.shape[1] == 3  # fine, coarse, front
    assert mapping[:, 0].tolist() == list(range(30))
    kept = mapping[mapping[:, 2] % 2 == 0]
    assert kept.size > 0

    # stdout mode concatenates the per-stage payloads byte-for-byte
    capsys.readouterr()
    assert run(["pool", str(points_file), str(edges_file),
                "--stages", "3", "-o", "-"]) == 0
    streamed = capsys.readouterr().out
    concatenated = ""
    index = 1
    while (tmp_path / f"pyr_stage{index}.edges").exists():
        concatenated += read(tmp_path / f"pyr_stage{index}.edges")
        concatenated += read(tmp_path / f"pyr_stage{index}.map")
        index += 1
    assert streamed == concatenated


def test_stats_disconnected_reports_unreachable(tmp_path, capsys):
    (tmp_path / "p.txt").write_text("0 0\n1 0\n2 0\n")
    (tmp_path / "e.txt").write_text("0 1\n")
    assert run(["stats", str(tmp_path / "p.txt"), str(tmp_path / "e.txt"),
                "-o", "-"]) == 0
    report = capsys.readouterr().out
    assert '"hop_diameter": "unreachable"' in report


def test_density_subcommand(workspace, capsys):
    tmp_path, points_file = workspace
    out = tmp_path / "density.json"
    assert run(["density", str(points_file), "--bandwidth", "0.2",
                "--grid", "16", "-o", str(out)]) == 0
    doc = read_report(out)
    assert doc["resolution"] == [16, 16]
    assert len(doc["values"]) == 256
    total = (np.asarray(doc["values"]).sum()
             * np.prod([(hi - lo) / 16 for lo, hi in doc["extents"]]))
    assert total == pytest.approx(1.0, abs=0.02)


def test_reference_configurations_accepted(workspace):
    tmp_path, points_file = workspace
    edges_file = tmp_path / "mesh.edges"
    run(["triangulate", str(points_file), "-o", str(edges_file)])
    # dense-mesh setting: 10 splits, 8 bins merged per step
    assert run(["rewire", str(points_file), str(edges_file), "--levels", "10",
                "--merge-exponent", "3", "-o", str(tmp_path / "dense.edges")]) == 0
    # small-mesh setting: 4 splits, adjacent levels connected directly
    assert run(["rewire", str(points_file), str(edges_file), "--levels", "4",
                "--merge-exponent", "1", "-o", str(tmp_path / "small.edges")]) == 0


def test_input_error_exit_code(tmp_path, capsys):
    (tmp_path / "p.txt").write_text("0 0\n1\n")
    assert run(["density", str(tmp_path / "p.txt")]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    assert err.count("\n") == 1
    assert "Traceback" not in err


def test_missing_file_exit_code(tmp_path, capsys):
    assert run(["stats", str(tmp_path / "nope.txt"), str(tmp_path / "nope.edg")]) == 1
    assert capsys.readouterr().err.count("\n") == 1


def test_usage_error_exit_code(capsys):
    assert run(["rewire"]) == 2
    assert "usage" in capsys.readouterr().err
    assert run(["frobnicate"]) == 2
    capsys.readouterr()
    assert run(["rewire", "a", "b", "--levels", "0"]) == 2
    assert "positive integer" in capsys.readouterr().err


def test_version_flag(capsys):
    assert run(["--version"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("treewire ")
