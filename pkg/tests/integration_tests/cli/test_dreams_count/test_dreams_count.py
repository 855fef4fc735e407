import sys
import json
import subprocess
import pytest
import os
import tempfile


@pytest.mark.integration
def test_dreams_count():
    script_path = os.path.abspath(__file__)
    script_dir_path = os.path.dirname(script_path)

    with tempfile.TemporaryDirectory(dir=script_dir_path) as tmp_dir:

        result = subprocess.run(
            [sys.executable, "../../../../../pfaffschub.py", "dreams", "--fpf", "(1,2)(3,6)(4,5)", "--n", "6", "--no-cache"],
            cwd=tmp_dir,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True)

        assert result.returncode == 0, ("The return code is equal to '0'")
        data = json.loads(result.stdout)
        assert data["count"] == 4, ("Four involution pipe dreams are expected")


if __name__ == "__main__":
    pytest.main([__file__])
