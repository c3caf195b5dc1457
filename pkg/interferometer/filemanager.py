import pathlib
import configparser


class Filemanager:
    # root path of this repository
    root_path = pathlib.Path(__file__).parent.parent.absolute()
    settings_ini_path = f"{root_path}/interferometer/settings.ini"
    logging_ini_path = f"{root_path}/interferometer/logging.ini"
    logfile_path = f"{root_path}/interferometer/logfile.log"
    output_folder = f"{root_path}/output"


class Config:
    @staticmethod
    def read(filename: str) -> configparser.ConfigParser:
        config = configparser.ConfigParser()
        config.read(filename, encoding="utf8")
        return config

    @staticmethod
    def get_section_by_name(section_name: str) -> configparser.SectionProxy:
        """Get a section from settings.ini file"""
        config = Config.read(Filemanager.settings_ini_path)
        return config[section_name]

    @staticmethod
    def get_series_rel_tol() -> float:
        return float(Config.get_section_by_name("Series")["rel_tol"])

    @staticmethod
    def get_series_max_terms() -> int:
        return int(Config.get_section_by_name("Series")["max_terms"])

    @staticmethod
    def get_quadrature_order() -> int:
        return int(Config.get_section_by_name("Quadrature")["order"])

    @staticmethod
    def get_crossing_bracket() -> tuple[float, float, float]:
        """Return (lower, upper, max_upper) of the bisection bracket"""
        section = Config.get_section_by_name("Crossing")
        return float(section["lower"]), float(section["upper"]), float(section["max_upper"])

    @staticmethod
    def get_crossing_xtol() -> float:
        return float(Config.get_section_by_name("Crossing")["xtol"])

    @staticmethod
    def get_oracle_settings() -> dict[str, float]:
        section = Config.get_section_by_name("Oracle")
        return {
            "n_points": int(section["n_points"]),
            "extent": float(section["extent"]),
            "n_max": int(section["n_max"]),
            "g_tolerance": float(section["g_tolerance"]),
            "gamma_tolerance": float(section["gamma_tolerance"]),
            "identity_tolerance": float(section["identity_tolerance"]),
            "dense_limit": int(section["dense_limit"]),
        }

    @staticmethod
    def get_sweep_workers() -> int:
        return int(Config.get_section_by_name("Sweep")["workers"])

    @staticmethod
    def get_significant_digits() -> int:
        return int(Config.get_section_by_name("Sweep")["significant_digits"])
