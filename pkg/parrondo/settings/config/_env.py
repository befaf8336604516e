from pydantic_settings import BaseSettings, SettingsConfigDict


class EnvSettingsFile(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="PARRONDO_", case_sensitive=True, extra="ignore"
    )
    DEBUG: bool = False
