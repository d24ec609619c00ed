//! Pole/weight tables of the rational approximations R_nu to e^{-x} on
//! [0, inf), degrees 4..=14, in partial-fraction form
//! R_nu(x) = sum_j theta_j / (x - xi_j).
//!
//! Layout per table row: (Re xi, Im xi, Re theta, Im theta). Conjugate pairs
//! are adjacent (positive imaginary part first); for odd degree the single
//! real (negative) pole is last.

// degree 4: sup error on [0,100] ~ 2.92e-04
pub(super) const TABLE_4: [(f64, f64, f64, f64); 4] = [
    (-1.5484005705393915, 1.1918258539276196, 0.059944425053053654, -1.9063671653914056),
    (-1.5484005705393915, -1.1918258539276196, 0.059944425053053654, 1.9063671653914056),
    (0.36783831439986264, 3.658133272063283, -0.0729418729662358, 0.4489286732119924),
    (0.36783831439986264, -3.658133272063283, -0.0729418729662358, -0.4489286732119924),
];

// degree 5: sup error on [0,100] ~ 2.47e-05
pub(super) const TABLE_5: [(f64, f64, f64, f64); 5] = [
    (-1.440594773992828, 2.3969827787124234, -1.872386138819437, -0.3777672440922072),
    (-1.440594773992828, -2.3969827787124234, -1.872386138819437, 0.3777672440922072),
    (1.0395069762766809, 4.921388603221931, 0.2386119811197994, 0.10373254572082616),
    (1.0395069762766809, -4.921388603221931, 0.2386119811197994, -0.10373254572082616),
    (-2.155414289432619, 0.0, 3.2723743835176387, 0.0),
];

// degree 6: sup error on [0,100] ~ 1.42e-06
pub(super) const TABLE_6: [(f64, f64, f64, f64); 6] = [
    (-2.4006029389330075, 1.193129308402292, 0.578896026440102, -4.287038619345728),
    (-2.4006029389330075, -1.193129308402292, 0.578896026440102, 4.287038619345728),
    (-1.1585525717193166, 3.6147726008201193, -0.6628927311356911, 1.451363289110632),
    (-1.1585525717193166, -3.6147726008201193, -0.6628927311356911, -1.451363289110632),
    (1.7819882759207992, 6.196512467347569, 0.08359008589400914, -0.10638767265986976),
    (1.7819882759207992, -6.196512467347569, 0.08359008589400914, 0.10638767265986976),
];

// degree 7: sup error on [0,100] ~ 1.66e-07
pub(super) const TABLE_7: [(f64, f64, f64, f64); 7] = [
    (-2.423196319445775, 2.393029298772205, -4.45667742022005, -1.5604355423747924),
    (-2.423196319445775, -2.393029298772205, -4.45667742022005, 1.5604355423747924),
    (-0.7576085974251853, 4.843618480313467, 0.9025987229694182, 0.7400273187237577),
    (-0.7576085974251853, -4.843618480313467, 0.9025987229694182, -0.7400273187237577),
    (2.575726131083259, 7.480977367602826, -0.03967703347474064, -0.052478913082545896),
    (2.575726131083259, -7.480977367602826, -0.03967703347474064, 0.052478913082545896),
    (-2.941096892577772, 0.0, 7.187643664812324, 0.0),
];

// degree 8: sup error on [0,100] ~ 2.90e-08
pub(super) const TABLE_8: [(f64, f64, f64, f64); 8] = [
    (-3.2209452449505678, 1.1936196054172876, 1.831803371026478, -9.525574551906619),
    (-3.2209452449505678, -1.1936196054172876, 1.831803371026478, 9.525574551906619),
    (-2.2922491477094993, 3.600771496074937, -2.4362655502886237, 3.716776073212382),
    (-2.2922491477094993, -3.600771496074937, -2.4362655502886237, -3.716776073212382),
    (-0.269490987246265, 6.0820325927101395, 0.6325797946063737, -0.4439345854980872),
    (-0.269490987246265, -6.0820325927101395, 0.6325797946063737, 0.4439345854980872),
    (3.408539501577154, 8.773034564444613, -0.028127311513769584, 0.01157555230118302),
    (3.408539501577154, -8.773034564444613, -0.028127311513769584, -0.01157555230118302),
];

// degree 9: sup error on [0,100] ~ 2.92e-09
pub(super) const TABLE_9: [(f64, f64, f64, f64); 9] = [
    (-3.3196836155980773, 2.391341566616074, -10.197193831863512, -4.5617830889601585),
    (-3.3196836155980773, -2.391341566616074, -10.197193831863512, 4.5617830889601585),
    (-2.047795523605495, 4.816232265195582, 2.4638968240329633, 2.789688192752746),
    (-2.047795523605495, -4.816232265195582, 2.4638968240329633, -2.789688192752746),
    (0.28571636062432143, 7.32875795846089, -0.15496332769313123, -0.4475840692413772),
    (0.28571636062432143, -7.32875795846089, -0.15496332769313123, 0.4475840692413772),
    (4.27227734105016, 10.071413404284925, 0.0018217361997774852, 0.013400068866814052),
    (4.27227734105016, -10.071413404284925, 0.0018217361997774852, -0.013400068866814052),
    (-3.7264404424523745, 0.0, 15.7728801786847, 0.0),
];

// degree 10: sup error on [0,100] ~ 4.88e-10
pub(super) const TABLE_10: [(f64, f64, f64, f64); 10] = [
    (-4.027732467649549, 1.1938560664708728, 4.818380130802547, -21.05459904212863),
    (-4.027732467649549, -1.1938560664708728, 4.818380130802547, 21.05459904212863),
    (-3.2837528833704184, 3.594386772405083, -7.117163807552, 8.81953171961414),
    (-3.2837528833704184, -3.594386772405083, -7.117163807552, -8.81953171961414),
    (-1.715406015926698, 6.038934925576109, 2.565585765481675, -1.2163850404786063),
    (-1.715406015926698, -6.038934925576109, 2.565585765481675, 1.2163850404786063),
    (0.8944047014173541, 8.582756898773036, -0.27258719444879853, 0.01421203159226738),
    (0.8944047014173541, -8.582756898773036, -0.27258719444879853, -0.01421203159226738),
    (5.161191271764947, 11.375156252224778, 0.0057848428709178475, 0.0006858231084556661),
    (5.161191271764947, -11.375156252224778, 0.0057848428709178475, -0.0006858231084556661),
];

// degree 11: sup error on [0,100] ~ 4.98e-11
pub(super) const TABLE_11: [(f64, f64, f64, f64); 11] = [
    (-4.176509341864806, 2.39046527863192, -22.940708067106574, -11.849853872664161),
    (-4.176509341864806, -2.39046527863192, -22.940708067106574, 11.849853872664161),
    (-3.1429903144692615, 4.803073247350763, 5.983566202833211, 8.46445719442812),
    (-3.1429903144692615, -4.803073247350763, 5.983566202833211, -8.46445719442812),
    (-1.3125381205613225, 7.2683188400209, -0.3085127737679928, -1.9833756778167018),
    (-1.3125381205613225, -7.2683188400209, -0.3085127737679928, 1.9833756778167018),
    (1.5468803139955989, 9.843173296877191, -0.034047171398151416, 0.14565220591416367),
    (1.5468803139955989, -9.843173296877191, -0.034047171398151416, -0.14565220591416367),
    (6.071061003368324, 12.683520454717263, 0.0008816726876258752, -0.0022803522737174097),
    (6.071061003368324, -12.683520454717263, 0.0008816726876258752, 0.0022803522737174097),
    (-4.5116223104764925, 0.0, 34.59764034811168, 0.0),
];

// degree 12: sup error on [0,100] ~ 3.83e-12
pub(super) const TABLE_12: [(f64, f64, f64, f64); 12] = [
    (-4.82749345216446, 1.1939879912233993, 11.799379444857381, -46.41163595831087),
    (-4.82749345216446, -1.1939879912233993, 11.799379444857381, 46.41163595831087),
    (-4.206124204321871, 3.590920758885602, -18.785976874713114, 20.237284836587197),
    (-4.206124204321871, -3.590920758885602, -18.785976874713114, -20.237284836587197),
    (-2.9178685450832536, 6.017345924094156, 8.238256036401598, -2.796190922595028),
    (-2.9178685450832536, -6.017345924094156, 8.238256036401598, 2.796190922595028),
    (-0.8517070967201087, 8.503832825637502, -1.3194116770370288, -0.1835235664325626),
    (-0.8517070967201087, -8.503832825637502, -1.3194116770370288, 0.1835235664325626),
    (2.2359682461249557, 11.109296232707466, 0.06857149475994821, 0.038419045906706036),
    (2.2359682461249557, -11.109296232707466, 0.06857149475994821, -0.038419045906706036),
    (6.998687908595893, 13.995916624979262, -0.0008184289227652509, -0.0005813535629580876),
    (6.998687908595893, -13.995916624979262, -0.0008184289227652509, 0.0005813535629580876),
];

// degree 13: sup error on [0,100] ~ 4.17e-13
pub(super) const TABLE_13: [(f64, f64, f64, f64); 13] = [
    (-5.0116980787825876, 2.3899519823815507, -51.16359284764606, -29.083358792257457),
    (-5.0116980787825876, -2.3899519823815507, -51.16359284764606, 29.083358792257457),
    (-4.139546835141408, 4.795667068660499, 13.76608731757975, 23.10895754397889),
    (-4.139546835141408, -4.795667068660499, 13.76608731757975, -23.10895754397889),
    (-2.623128528450508, 7.236992299554541, -0.2155785290031323, -6.788506218725754),
    (-2.623128528450508, -7.236992299554541, -0.2155785290031323, 6.788506218725754),
    (-0.3422276404276667, 9.744966879751862, -0.3514391628959075, 0.7609929439621899),
    (-0.3422276404276667, -9.744966879751862, -0.3514391628959075, -0.7609929439621899),
    (2.9561938216968002, 12.380530211015124, 0.028327814748178033, -0.028043097345861197),
    (2.9561938216968002, -12.380530211015124, 0.028327814748178033, 0.028043097345861197),
    (7.941584223751641, 15.311867991178543, -0.0003077053885115401, 0.0002626937364736481),
    (7.941584223751641, -15.311867991178543, -0.0003077053885115401, -0.0002626937364736481),
    (-5.296714480229448, 0.0, 75.87300622645189, 0.0),
];

// degree 14: sup error on [0,100] ~ 6.44e-14
pub(super) const TABLE_14: [(f64, f64, f64, f64); 14] = [
    (-5.623142572746064, 1.1940690463439736, 27.87516199764006, -102.14733992643619),
    (-5.623142572746064, -1.1940690463439736, 27.87516199764006, 102.14733992643619),
    (-5.089345060580715, 3.588824029027027, -46.93327454536465, 45.643649809071974),
    (-5.089345060580715, -3.588824029027027, -46.93327454536465, -45.643649809071974),
    (-3.9933697105786674, 6.004831642235073, 23.498232069864898, -5.8083591683992655),
    (-3.9933697105786674, -6.004831642235073, 23.498232069864898, 5.8083591683992655),
    (-2.269783829231225, 8.461737973040277, -4.807112079119813, -1.3209793918095156),
    (-2.269783829231225, -8.461737973040277, -4.807112079119813, 1.3209793918095156),
    (0.20875863824999716, 10.991260561901344, 0.37636004093976894, 0.3351834772987664),
    (0.20875863824999716, -10.991260561901344, 0.37636004093976894, -0.3351834772987664),
    (3.703275049423281, 13.656371871483397, -0.00943902685234868, -0.017184791527749134),
    (3.703275049423281, -13.656371871483397, -0.00943902685234868, 0.017184791527749134),
    (8.897773186468662, 16.630982619902316, 7.154281378176492e-05, 0.0001436102803833248),
    (8.897773186468662, -16.630982619902316, 7.154281378176492e-05, -0.0001436102803833248),
];

