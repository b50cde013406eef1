from higher_bell.settings import Settings, load_settings


def test_packaged_config_holds_the_reference_bounds():
    settings = load_settings()
    assert (settings.n_max, settings.m_max) == (8, 5)
    assert settings.compare_m == (100, 100000, 100000000)
    assert settings.log_format == '%(threadName)s %(message)s'


def test_missing_config_falls_back_to_defaults(tmp_path):
    assert load_settings(tmp_path / 'absent.ini') == Settings()


def test_partial_config_keeps_other_defaults(tmp_path):
    config = tmp_path / 'config.ini'
    config.write_text('[DEFAULTS]\nDIGITS=4\n[MEMO]\nMAX_CACHED_M=10\n', encoding='utf-8')
    settings = load_settings(config)
    assert settings.digits == 4
    assert settings.max_cached_m == 10
    assert settings.n_max == 8


def test_bad_value_falls_back_to_defaults(tmp_path):
    config = tmp_path / 'config.ini'
    config.write_text('[DEFAULTS]\nN_MAX=eight\n', encoding='utf-8')
    assert load_settings(config) == Settings()
