import sys
import subprocess
import pytest
import os
import tempfile


@pytest.mark.integration
def test_usage_error():
    script_path = os.path.abspath(__file__)
    script_dir_path = os.path.dirname(script_path)

    with tempfile.TemporaryDirectory(dir=script_dir_path) as tmp_dir:

        result = subprocess.run(
            [sys.executable, "../../../../../pfaffschub.py", "diagram", "--fpf", "(1,2)(2,3)", "--n", "4"],
            cwd=tmp_dir,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True)

        assert result.returncode == 2, ("The return code is equal to '2'")
        assert "more than one cycle" in result.stderr, ("The expected error message is missing")


if __name__ == "__main__":
    pytest.main([__file__])
