from ._env import EnvSettingsFile

env = EnvSettingsFile()

__all__ = ["env", "EnvSettingsFile"]
