from .utils import Singleton


class ExecutionEnvironment(metaclass=Singleton):
    """This class holds the process-wide settings.

    This is a singleton.
    """

    def __init__(self):
        self.__settings = None

    @property
    def settings(self):
        """Return the settings read from app.cfg"""
        if self.__settings is None:
            from .settings import Settings
            self.__settings = Settings()
        return self.__settings

    @settings.setter
    def settings(self, newvalue):
        self.__settings = newvalue
