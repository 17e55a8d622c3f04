import os


def _threads_from_env():
    value = os.getenv('ZKLB_THREADS')
    return int(value) if value else None


class Config:
    """Base configuration."""
    DEBUG = False
    TESTING = False
    # caps scipy.fft workers and probe trial threads; None lets the libraries decide
    THREADS = _threads_from_env()
    LOG_LEVEL = os.getenv('ZKLB_LOG_LEVEL', 'INFO')
    LOG_FORMAT = os.getenv('ZKLB_LOG_FORMAT', 'console')


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True
    LOG_LEVEL = os.getenv('ZKLB_LOG_LEVEL', 'DEBUG')


class TestingConfig(Config):
    """Testing configuration."""
    DEBUG = True
    TESTING = True
    THREADS = 1
    LOG_LEVEL = os.getenv('ZKLB_LOG_LEVEL', 'WARNING')


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False


config_by_name = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig
}
