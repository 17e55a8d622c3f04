import math

import pytest

from app.services.run_service.domain.enums.initial_condition_family import InitialConditionFamily
from app.services.run_service.infrastructure.persistence.config_repository import ConfigRepository
from app.services.run_service.domain.value_objects.run_config import RunConfig
from app.shared.domain.exceptions.common_errors import ConfigurationError, ResourceNotFoundError

MINIMAL = """
[solver]
dt = 0.01
t_final = 1.0
"""


@pytest.fixture
def repository():
    return ConfigRepository()


class TestParse:

    def test_defaults(self, repository):
        config = repository.parse_text(MINIMAL)
        assert config.grid.n_points == 128
        assert config.grid.period == pytest.approx(32.0 * math.pi)
        assert config.grid.dealias is True
        assert config.solver.checkpoint_every == 100
        assert config.data.family is InitialConditionFamily.GAUSSIAN_PACKET
        assert config.diagnostics.s_values == [1.0, 2.0]
        assert config.probe.b_exponent == 0.55
        assert config.output.formats == ["csv"]

    def test_lists_and_flags(self, repository):
        config = repository.parse_text(MINIMAL + """
[grid]
n_points = 32
dealias = false  # comment
[diagnostics]
s_values = 1, 3, 5
[probe]
resolutions = 16, 32
sampler = modulated
""")
        assert config.grid.n_points == 32
        assert config.grid.dealias is False
        assert config.diagnostics.s_values == [1.0, 3.0, 5.0]
        assert config.probe.resolutions == [16, 32]
        assert config.probe.sampler.value == "modulated"

    def test_rejects_b_mean(self, repository):
        with pytest.raises(ConfigurationError) as error:
            repository.parse_text(MINIMAL + "[data]\nb_mean = 0.5\n")
        assert "data.b_mean" in error.value.message
        assert "mean-free" in error.value.message
        assert error.value.exit_code == 2

    def test_unknown_key(self, repository):
        with pytest.raises(ConfigurationError) as error:
            repository.parse_text(MINIMAL + "[grid]\npoints = 64\n")
        assert "unknown key 'grid.points'" in error.value.message

    def test_missing_required_key(self, repository):
        with pytest.raises(ConfigurationError) as error:
            repository.parse_text("[solver]\ndt = 0.1\n")
        assert "missing required key 'solver.t_final'" in error.value.message

    def test_unknown_section(self, repository):
        with pytest.raises(ConfigurationError) as error:
            repository.parse_text(MINIMAL + "[server]\nport = 1\n")
        assert "[server]" in error.value.message

    @pytest.mark.parametrize("section", [
        "[grid]\nn_points = 48\n",
        "[probe]\nb_exponent = 0.5\n",
        "[output]\nformats = csv, hdf5\n",
    ])
    def test_invalid_values(self, repository, section):
        with pytest.raises(ConfigurationError):
            repository.parse_text(MINIMAL + section)

    def test_missing_file(self, repository, tmp_path):
        with pytest.raises(ResourceNotFoundError):
            repository.parse(tmp_path / "absent.cfg")

    def test_malformed(self, repository):
        with pytest.raises(ConfigurationError):
            repository.parse_text("dt = 0.1\n")


class TestRender:

    def test_round_trip(self, repository, tmp_path):
        config = repository.parse_text(MINIMAL + "[data]\nfamily = multi_mode_random\nseed = 17\n")
        config = config.with_overrides(grid={"period": 10.0 * math.pi}, diagnostics={"s_values": [0.5, 2]})
        path = repository.write(config, tmp_path / "run.cfg")
        assert repository.parse(path) == config

    def test_with_overrides_validates(self, repository):
        config = repository.parse_text(MINIMAL)
        with pytest.raises(Exception):
            config.with_overrides(grid={"n_points": 100})
        assert config.with_overrides(data={"seed": 3, "amplitude": None}).data.amplitude == 0.1

    def test_solver_required(self):
        with pytest.raises(Exception):
            RunConfig()
