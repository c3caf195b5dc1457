import json

from interferometer.format import Format
from interferometer.sensitivity import penalty_factor, sql_crossing


def cmd_crossing(nu: float, mu: float, as_json: bool = False) -> dict:
    result = sql_crossing(nu, mu)
    penalty = penalty_factor(nu, mu)
    report = Format.crossing_to_dict(result, penalty)

    if as_json:
        print(json.dumps(report, indent=2))
        return report

    print(f"\n----- SQL CROSSING FOR nu={Format.number(nu)}, mu={Format.number(mu)} -----")
    print(f"> xi*        {Format.number(result.xi_star)}")
    print(f"> penalty    {Format.number(penalty)} (relative to nu = mu = 0)")
    print(f"> iterations {result.iterations}")
    return report
