"""Secondary acceptance: all three plot operations run on real artifact
directories produced through the solver CLI (the only coupling surface)."""

import glob
import os
import subprocess
import sys

import pytest

from chfigures import plot_energy_series, plot_field2d, plot_profiles
from chfigures.artifacts import ArtifactError


def run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "chrelax.cli", *args],
                          capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="module")
def artifact_dirs(tmp_path_factory):
    root = tmp_path_factory.mktemp("artifacts")
    sn = str(root / "exact-sn")
    sp = str(root / "spinodal")
    ow = str(root / "ostwald2d")
    run_cli(["exact-sn", "--nx", "128", "--t-end", "0.001", "--out", sn])
    run_cli(["spinodal", "--nx", "128", "--t-end", "0.002", "--snapshots", "0.001",
             "--out", sp])
    run_cli(["ostwald2d", "--nx", "30", "--ny", "36", "--t-end", "0.0002", "--out", ow])
    return {"sn": sn, "sp": sp, "ow": ow}


def test_a12_all_plot_operations(artifact_dirs, tmp_path):
    sn_snaps = sorted(glob.glob(os.path.join(artifact_dirs["sn"], "snap_hyp_*.csv")))
    assert len(sn_snaps) >= 2
    out1 = plot_profiles(sn_snaps[:2], ["initial", "final"], str(tmp_path / "profiles.png"))
    assert os.path.getsize(out1) > 1000

    out2 = plot_energy_series(os.path.join(artifact_dirs["sn"], "series_hyp.csv"),
                              str(tmp_path / "energy.png"))
    assert os.path.getsize(out2) > 1000

    vtks = sorted(glob.glob(os.path.join(artifact_dirs["ow"], "snap_hyp_*.vtk")))
    cut_csvs = sorted(glob.glob(os.path.join(artifact_dirs["ow"], "snap_hyp_y0_*.csv")))
    assert vtks and cut_csvs
    out3 = plot_field2d(vtks[-1], str(tmp_path / "field.png"), cuts=(0.0, 0.4),
                        cut_csvs=cut_csvs[-1:])
    assert os.path.getsize(out3) > 1000

    # spinodal (both-solver) comparison artifacts are also plottable
    ref_snaps = sorted(glob.glob(os.path.join(artifact_dirs["sp"], "snap_ref_*.csv")))
    hyp_snaps = sorted(glob.glob(os.path.join(artifact_dirs["sp"], "snap_hyp_*.csv")))
    assert ref_snaps and hyp_snaps
    out4 = plot_profiles([hyp_snaps[-1], ref_snaps[-1]], ["relaxation", "fourth-order"],
                         str(tmp_path / "cross.png"))
    assert os.path.getsize(out4) > 1000
    print("[A12] PASS: profiles, energy series, and 2D field plots rendered "
          "from CLI-produced artifact directories")


def test_a12_corrupt_inputs_named_errors(tmp_path):
    bad_csv = tmp_path / "broken.csv"
    bad_csv.write_text("# x,c\n0.0,not-a-number\n")
    with pytest.raises(ArtifactError, match="broken.csv"):
        plot_profiles([str(bad_csv)], out_image=str(tmp_path / "x.png"))
    bad_vtk = tmp_path / "broken.vtk"
    bad_vtk.write_text("garbage\n")
    with pytest.raises(ArtifactError, match="broken.vtk"):
        plot_field2d(str(bad_vtk), str(tmp_path / "y.png"))
