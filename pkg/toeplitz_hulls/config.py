import os

import yaml

config_path = os.path.join(os.path.dirname(__file__), "config.yaml")
if os.path.exists(config_path):
    with open(config_path, "r") as handle:
        DEFAULTS = yaml.safe_load(handle)
else:
    raise FileNotFoundError(f"config.yaml is required next to {__file__}")

_settings = dict(DEFAULTS)


def get_setting(key, value=None):
    """Return `value` when given, otherwise the live setting for `key`."""
    if value is not None:
        return value
    if key not in _settings:
        raise KeyError(f"Unknown setting: {key}")
    return _settings[key]


def override_settings(**values):
    for key, value in values.items():
        if value is None:
            continue
        if key not in _settings:
            raise KeyError(f"Unknown setting: {key}")
        _settings[key] = value


def reset_settings():
    _settings.clear()
    _settings.update(DEFAULTS)
