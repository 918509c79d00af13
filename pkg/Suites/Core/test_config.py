import config


def test_defaults():
    assert config.APP_NAME == "listhom"
    assert config.BRUTE_MAX_N >= config.FUZZ_MAX_N
    assert config.FUZZ_DENSITIES == (0.4, 0.7, 1.0)
    assert all(size > 0 for size in config.BENCHMARK_SIZES)


def test_validate_settings(monkeypatch, capsys):
    assert config.validate_settings()
    monkeypatch.setattr(config, "FUZZ_MAX_N", 0)
    assert not config.validate_settings()
    assert "Warning" in capsys.readouterr().out
