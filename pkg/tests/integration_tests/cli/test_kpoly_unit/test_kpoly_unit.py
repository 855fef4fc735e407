import sys
import subprocess
import pytest
import os
import tempfile


@pytest.mark.integration
def test_kpoly_unit():
    script_path = os.path.abspath(__file__)
    script_dir_path = os.path.dirname(script_path)

    with tempfile.TemporaryDirectory(dir=script_dir_path) as tmp_dir:

        result = subprocess.run(
            [sys.executable, "../../../../../pfaffschub.py", "kpoly", "--fpf", "()", "--n", "2", "--format", "text", "--no-cache"],
            cwd=tmp_dir,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True)

        assert result.returncode == 0, ("The return code is equal to '0'")
        assert result.stdout.strip() == "1", ("The K-polynomial of the unit is 1")


if __name__ == "__main__":
    pytest.main([__file__])
