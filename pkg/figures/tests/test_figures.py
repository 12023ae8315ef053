import os

import numpy as np
import pytest

from chfigures import ArtifactError, plot_energy_series, plot_field2d, plot_profiles
from chfigures.artifacts import read_columns_csv, read_structured_points


def write_snapshot(path, n=40, shift=0.0):
    x = np.linspace(0, 1, n, endpoint=False) + 0.0125
    c = np.tanh((x - 0.5 - shift) / 0.05)
    phi = c * 0.98
    rows = np.column_stack([x, c, phi, 0 * x, 0 * x, 0 * x])
    np.savetxt(path, rows, delimiter=",", header="x,c,phi,w,q1,p1", comments="# ")
    return path


def write_series(path, n=30):
    t = np.linspace(0, 1, n)
    e = 1.0 - 0.5 * t
    rows = np.column_stack([t, e, 0.7 * e, 0.3 * e, 0 * t, e * 0.99])
    np.savetxt(path, rows, delimiter=",", header="time,E,E_I,E_II,mass,E_predicted", comments="# ")
    return path


def write_vtk(path, nx=12, ny=9):
    rng = np.random.default_rng(0)
    c = rng.standard_normal((nx, ny))
    with open(path, "w") as fh:
        fh.write("# vtk DataFile Version 3.0\ntest\nASCII\nDATASET STRUCTURED_POINTS\n")
        fh.write(f"DIMENSIONS {nx} {ny} 1\nORIGIN 0.05 0.05 0\nSPACING 0.1 0.1 1\n")
        fh.write(f"POINT_DATA {nx * ny}\nSCALARS c double 1\nLOOKUP_TABLE default\n")
        for v in c.T.ravel():
            fh.write(f"{float(v)}\n")
    return path, c


def test_profiles_single_and_overlay(tmp_path):
    p1 = write_snapshot(str(tmp_path / "a.csv"))
    p2 = write_snapshot(str(tmp_path / "b.csv"), shift=0.1)
    out = str(tmp_path / "fig.png")
    plot_profiles([p1, p2], ["initial", "final"], out)
    assert os.path.getsize(out) > 1000


def test_profiles_missing_column_names_file(tmp_path):
    path = tmp_path / "bad.csv"
    np.savetxt(path, np.zeros((4, 2)), delimiter=",", header="x,notc", comments="# ")
    with pytest.raises(ArtifactError, match="bad.csv"):
        plot_profiles([str(path)], out_image=str(tmp_path / "x.png"))


def test_profiles_label_mismatch(tmp_path):
    p1 = write_snapshot(str(tmp_path / "a.csv"))
    with pytest.raises(ArtifactError, match="labels"):
        plot_profiles([p1], ["a", "b"], str(tmp_path / "x.png"))


def test_energy_series_render_and_zero_rows(tmp_path):
    path = write_series(str(tmp_path / "series.csv"))
    out = str(tmp_path / "energy.png")
    plot_energy_series(path, out)
    assert os.path.getsize(out) > 1000

    empty = tmp_path / "empty.csv"
    empty.write_text("# time,E,E_I,E_II,mass,E_predicted\n")
    with pytest.raises(ArtifactError, match="empty.csv"):
        plot_energy_series(str(empty), str(tmp_path / "y.png"))


def test_field2d_render_and_cuts(tmp_path):
    path, c = write_vtk(str(tmp_path / "snap.vtk"))
    out = str(tmp_path / "field.png")
    plot_field2d(path, out, cuts=(0.45,))
    assert os.path.getsize(out) > 1000
    with pytest.raises(ArtifactError, match="not present"):
        plot_field2d(path, out, field="nope")


def test_field2d_cut_symmetry(tmp_path):
    # radial bubble: the y=0 cut is symmetric in x
    nx = ny = 21
    x = np.linspace(-1, 1, nx)
    y = np.linspace(-1, 1, ny)
    R = np.hypot(x[:, None], y[None, :])
    c = -np.tanh((R - 0.5) / 0.2)
    path = str(tmp_path / "bubble.vtk")
    with open(path, "w") as fh:
        fh.write("# vtk DataFile Version 3.0\nbubble\nASCII\nDATASET STRUCTURED_POINTS\n")
        fh.write(f"DIMENSIONS {nx} {ny} 1\nORIGIN -1 -1 0\nSPACING 0.1 0.1 1\n")
        fh.write(f"POINT_DATA {nx * ny}\nSCALARS c double 1\nLOOKUP_TABLE default\n")
        fh.write("\n".join(str(v) for v in c.T.ravel()) + "\n")
    xx, yy, fields = read_structured_points(path)
    j = int(np.argmin(np.abs(yy)))
    cut = fields["c"][:, j]
    assert np.allclose(cut, cut[::-1])
    plot_field2d(path, str(tmp_path / "bubble.png"), cuts=(0.0,))


def test_corrupt_vtk_variants(tmp_path):
    bad = tmp_path / "bad.vtk"
    bad.write_text("nonsense\n")
    with pytest.raises(ArtifactError, match="bad.vtk"):
        plot_field2d(str(bad), str(tmp_path / "z.png"))

    truncated = tmp_path / "trunc.vtk"
    truncated.write_text(
        "# vtk DataFile Version 3.0\nt\nASCII\nDATASET STRUCTURED_POINTS\n"
        "DIMENSIONS 4 4 1\nORIGIN 0 0 0\nSPACING 1 1 1\nPOINT_DATA 16\n"
        "SCALARS c double 1\nLOOKUP_TABLE default\n1 2 3\n"
    )
    with pytest.raises(ArtifactError, match="trunc.vtk"):
        read_structured_points(str(truncated))

    binary = tmp_path / "bin.vtk"
    binary.write_text(
        "# vtk DataFile Version 3.0\nt\nBINARY\nDATASET STRUCTURED_POINTS\n"
        "DIMENSIONS 4 4 1\nORIGIN 0 0 0\nSPACING 1 1 1\nPOINT_DATA 16\n"
    )
    with pytest.raises(ArtifactError, match="ASCII"):
        read_structured_points(str(binary))


def test_csv_reader_errors(tmp_path):
    missing = tmp_path / "nope.csv"
    with pytest.raises(ArtifactError):
        read_columns_csv(str(missing))
    unheadered = tmp_path / "h.csv"
    unheadered.write_text("1,2\n3,4\n")
    with pytest.raises(ArtifactError, match="header"):
        read_columns_csv(str(unheadered))


def test_rendering_is_deterministic(tmp_path):
    p1 = write_snapshot(str(tmp_path / "a.csv"))
    out1 = str(tmp_path / "r1.png")
    out2 = str(tmp_path / "r2.png")
    plot_profiles([p1], ["a"], out1)
    plot_profiles([p1], ["a"], out2)
    assert open(out1, "rb").read() == open(out2, "rb").read()
