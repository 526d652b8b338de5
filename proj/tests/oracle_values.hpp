// Generated by tests/oracle/gen_values.py (60-digit series oracle).
// Do not edit by hand; re-run the generator instead.
#pragma once

namespace oracle {

struct MlPoint {
  const char* alpha;
  const char* beta;
  double z;
  double value;
};

inline constexpr MlPoint kMlPoints[] = {
    {"1/4", "1", 2.0000000000000000, 35544441.509930782},
    {"1/4", "1", 1.0000000000000000, 9.5541074007228536},
    {"1/4", "1", -1.0000000000000000, 0.46385276080171329},
    {"1/2", "1", 1.0000000000000000, 5.0089800807622835},
    {"1/2", "1", -1.0000000000000000, 0.42758357615580700},
    {"1/2", "1", -2.0000000000000000, 0.25539567631050574},
    {"3/4", "1", 3.0000000000000000, 100.86180177510028},
    {"3/4", "1", 5.0000000000000000, 6888.1316797401478},
    {"1", "1", 1.0000000000000000, 2.7182818284590452},
    {"1", "1", -5.0000000000000000, 0.0067379469990854671},
    {"1", "1", 5.0000000000000000, 148.41315910257660},
    {"3/2", "1", 2.0000000000000000, 3.3487008963183954},
    {"2", "1", 1.0000000000000000, 1.5430806348152438},
    {"2", "1", -4.0000000000000000, -0.41614683654714239},
    {"1/4", "3/4", 1.0000000000000000, 10.370156339821117},
    {"1/2", "1/2", 1.0000000000000000, 5.5731696643100398},
    {"1/2", "3/2", -1.0000000000000000, 0.57241642384419300},
    {"1", "2", 1.0000000000000000, 1.7182818284590452},
    {"3/2", "1/2", 2.0000000000000000, 4.1636279886572214},
    {"1", "1/2", 0.50000000000000000, 1.3600840063682731},
};

struct PrabhakarPoint {
  const char* alpha;
  const char* beta;
  const char* gamma;
  double z;
  double value;
};

inline constexpr PrabhakarPoint kPrabhakarPoints[] = {
    {"1", "1", "2", 0.50000000000000000, 2.4730819060501922},
    {"3/4", "5/4", "3/2", -1.0000000000000000, 0.32369318937272269},
};

inline constexpr double kE = 2.7182818284590452;
inline constexpr double kCosh1 = 1.5430806348152438;
inline constexpr double kEm1 = 1.7182818284590452;
inline constexpr double kGamma5_4 = 0.90640247705547708;
inline constexpr double kGamma3_2 = 0.88622692545275801;
inline constexpr double kTwoOverSqrtPi = 1.1283791670955126;
inline constexpr double kMl_1_2_at_m1 = 0.42758357615580700;
inline constexpr double kMl2_1_4_3_4_at_1 = 10.370156339821117;

}  // namespace oracle
