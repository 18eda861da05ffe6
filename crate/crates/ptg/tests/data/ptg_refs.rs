// generated by tools/oracle/gen_ptg_refs.py; do not edit by hand

pub const Y_REFS: [(f64, f64, f64, f64, f64); 35] = [
    (2.0, 1.0, 0.0, 0.0, 1.0),
    (2.0, 1.0, 0.001, 0.0010000006666666, 0.9999989999986667),
    (2.0, 1.0, 0.35, 0.3774600084339709, 0.8575239420330266),
    (2.0, 1.0, 1.0, 0.9759607208059087, 0.04750067144401124),
    (2.0, 1.0, 2.7, 0.9999999686876784, 6.262464234018379e-08),
    (2.0, 1.0, 8.0, 1.0, 2.4135664477436952e-26),
    (2.0, 1.0, 40.0, 1.0, 1.5968785695987258e-137),
    (2.0, 1.0, 0.0, 0.0, 1.0),
    (2.0, 1.0, 0.001, 0.0010000006666666, 0.9999989999986667),
    (2.0, 1.0, 0.35, 0.3774600084339709, 0.8575239420330266),
    (2.0, 1.0, 1.0, 0.9759607208059087, 0.04750067144401124),
    (2.0, 1.0, 2.7, 0.9999999686876784, 6.262464234018379e-08),
    (2.0, 1.0, 8.0, 1.0, 2.4135664477436952e-26),
    (2.0, 1.0, 40.0, 1.0, 1.5968785695987258e-137),
    (0.8, 0.7, 0.0, 0.0, 1.0),
    (0.8, 0.7, 0.001, 0.0006999998445067202, 0.9999995100002177),
    (0.8, 0.7, 0.35, 0.2386015265650841, 0.9430693115208114),
    (0.8, 0.7, 1.0, 0.5831213662769, 0.6599694721913614),
    (0.8, 0.7, 2.7, 0.918878077160305, 0.15566307931418058),
    (0.8, 0.7, 8.0, 0.9993286434423448, 0.001342262395682838),
    (0.8, 0.7, 40.0, 0.9999999999999998, 4.739251597189833e-16),
    (1.0, 1.0, 0.0, 0.0, 1.0),
    (1.0, 1.0, 0.001, 0.0009999996666668, 0.9999990000006667),
    (1.0, 1.0, 0.35, 0.3363755443363322, 0.8868514931724362),
    (1.0, 1.0, 1.0, 0.7615941559557649, 0.4199743416140261),
    (1.0, 1.0, 2.7, 0.9910074536781176, 0.017904226754413513),
    (1.0, 1.0, 8.0, 0.9999997749296758, 4.5014059756372915e-07),
    (1.0, 1.0, 40.0, 1.0, 7.219405551381661e-35),
    (4.0, 0.5, 0.0, 0.0, 1.0),
    (4.0, 0.5, 0.001, 0.0005000005833340563, 0.9999997499994167),
    (4.0, 0.5, 0.35, 0.20432676118868984, 0.9582505746621401),
    (4.0, 0.5, 1.0, 0.9939709000926691, 0.012021849768969235),
    (4.0, 0.5, 2.7, 0.9999999999999906, 1.8824400811743922e-14),
    (4.0, 0.5, 8.0, 1.0, 2.796076799357304e-51),
    (4.0, 0.5, 40.0, 1.0, 1.2239801128098581e-273),
];

pub const MU_REFS: [(f64, f64, f64, f64, f64, f64); 8] = [
    (2.0, 1.0, 0.3, 0.001, 0.7000003000004, 0.0006000016000005599),
    (2.0, 1.0, 0.3, 0.5, 0.7978377764261912, 0.4568060878786051),
    (2.0, 1.0, 0.3, 1.7, 0.9999440086327277, 0.0004478264409725087),
    (2.0, 1.0, 0.3, 6.0, 1.0, 5.147332368777615e-19),
    (4.0, 0.5, 0.3, 0.001, 0.700000075000175, 0.00015000070000191376),
    (4.0, 0.5, 0.3, 0.5, 0.7371613474851152, 0.2643910768410367),
    (4.0, 0.5, 0.3, 1.7, 0.9999999498173002, 8.02923003118516e-07),
    (4.0, 0.5, 0.3, 6.0, 1.0, 1.0597752046817668e-36),
];

pub const V_REFS: [(f64, f64, f64, f64, u32, f64, f64); 60] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0.0, -2100.5329710523565),
    (2.0, 1.0, 4.5, 0.0, 0, 0.003, -2100.5136427667253),
    (2.0, 1.0, 4.5, 0.0, 0, 0.35, -1791.4186905946597),
    (2.0, 1.0, 4.5, 0.0, 0, 1.0, -87.51586262198731),
    (2.0, 1.0, 4.5, 0.0, 0, 2.7, -0.00011387488725387546),
    (2.0, 1.0, 4.5, 0.0, 0, 9.0, -1.4722653747818258e-26),
    (2.0, 1.0, 4.5, 0.0, 2, 0.0, -2016.9296687219146),
    (2.0, 1.0, 4.5, 0.0, 2, 0.003, -2016.9120710586085),
    (2.0, 1.0, 4.5, 0.0, 2, 0.35, -1737.7416553463538),
    (2.0, 1.0, 4.5, 0.0, 2, 1.0, -188.79647449548565),
    (2.0, 1.0, 4.5, 0.0, 2, 2.7, -17.2024080435208),
    (2.0, 1.0, 4.5, 0.0, 2, 9.0, -1.5482093024155936),
    (2.0, 1.0, 4.5, 0.3, 0, 0.0, -2987.964963391564),
    (2.0, 1.0, 4.5, 0.3, 0, 0.003, -2987.92510265579),
    (2.0, 1.0, 4.5, 0.3, 0, 0.35, -2393.2667937009437),
    (2.0, 1.0, 4.5, 0.3, 0, 1.0, -97.12053846488888),
    (2.0, 1.0, 4.5, 0.3, 0, 2.7, -0.00012644039184519544),
    (2.0, 1.0, 4.5, 0.3, 0, 9.0, -1.6347222437232688e-26),
    (2.0, 1.0, 4.5, 0.3, 2, 0.0, -2868.5316743480757),
    (2.0, 1.0, 4.5, 0.3, 2, 0.003, -2868.4947465953815),
    (2.0, 1.0, 4.5, 0.3, 2, 0.35, -2320.9981241271057),
    (2.0, 1.0, 4.5, 0.3, 2, 1.0, -199.8652836535285),
    (2.0, 1.0, 4.5, 0.3, 2, 2.7, -17.202420932211655),
    (2.0, 1.0, 4.5, 0.3, 2, 9.0, -1.5482093024155936),
    (0.8, 0.7, 3.2, 0.0, 0, 0.0, -86.24901243599123),
    (0.8, 0.7, 3.2, 0.0, 0, 0.003, -86.24865793133117),
    (0.8, 0.7, 3.2, 0.0, 0, 0.35, -81.6484635842185),
    (0.8, 0.7, 3.2, 0.0, 0, 1.0, -58.1106455134779),
    (0.8, 0.7, 3.2, 0.0, 0, 2.7, -14.012149320816304),
    (0.8, 0.7, 3.2, 0.0, 0, 9.0, -0.049556431529962065),
    (0.8, 0.7, 3.2, 0.0, 2, 0.0, -114.10563277249452),
    (0.8, 0.7, 3.2, 0.0, 2, 0.003, -114.10518632031356),
    (0.8, 0.7, 3.2, 0.0, 2, 0.35, -108.317772852152),
    (0.8, 0.7, 3.2, 0.0, 2, 1.0, -78.84905486489485),
    (0.8, 0.7, 3.2, 0.0, 2, 2.7, -23.329251519498325),
    (0.8, 0.7, 3.2, 0.0, 2, 9.0, -1.5762006717644719),
    (1.0, 1.0, 4.5, 0.0, 0, 0.0, -517.2954331696102),
    (1.0, 1.0, 4.5, 0.0, 0, 0.003, -517.2907775386454),
    (1.0, 1.0, 4.5, 0.0, 0, 0.35, -458.764227317751),
    (1.0, 1.0, 4.5, 0.0, 0, 1.0, -217.25080896534948),
    (1.0, 1.0, 4.5, 0.0, 0, 2.7, -9.261774734491263),
    (1.0, 1.0, 4.5, 0.0, 0, 9.0, -3.15135949169192e-05),
    (1.0, 1.0, 4.5, 0.0, 2, 0.0, -559.0970843348313),
    (1.0, 1.0, 4.5, 0.0, 2, 0.003, -559.092353461002),
    (1.0, 1.0, 4.5, 0.0, 2, 0.35, -499.5613157013233),
    (1.0, 1.0, 4.5, 0.0, 2, 1.0, -251.85484353953981),
    (1.0, 1.0, 4.5, 0.0, 2, 2.7, -24.1778887429453),
    (1.0, 1.0, 4.5, 0.0, 2, 9.0, -1.5482331763506714),
    (4.0, 0.5, 5.5, 0.3, 0, 0.0, -4322.525331587332),
    (4.0, 0.5, 5.5, 0.3, 0, 0.003, -4322.511606357554),
    (4.0, 0.5, 5.5, 0.3, 0, 0.35, -4066.497027986742),
    (4.0, 0.5, 5.5, 0.3, 0, 1.0, -30.60221459058589),
    (4.0, 0.5, 5.5, 0.3, 0, 2.7, -4.776428589289839e-11),
    (4.0, 0.5, 5.5, 0.3, 0, 9.0, -7.983981340766793e-55),
    (4.0, 0.5, 5.5, 0.3, 2, 0.0, -4113.517075761228),
    (4.0, 0.5, 5.5, 0.3, 2, 0.003, -4113.5031422947095),
    (4.0, 0.5, 5.5, 0.3, 2, 0.35, -3860.878663383118),
    (4.0, 0.5, 5.5, 0.3, 2, 1.0, -150.40425651850242),
    (4.0, 0.5, 5.5, 0.3, 2, 2.7, -17.2023255824339),
    (4.0, 0.5, 5.5, 0.3, 2, 9.0, -1.5482093024155936),
];

pub const V_L_BRANCH_REFS: [(f64, u32, f64, f64); 6] = [
    (2.0, 1, 0.0034640739030231795, 1.3332965329590951),
    (2.0, 1, 0.034613373004202794, 1.329649600255887),
    (0.8, 2, 0.006000097922316688, -2.7199267097502937),
    (0.8, 2, 0.06009815227869812, -2.7126708774229673),
    (4.0, 1, 0.0015491759878941316, 9.333352851848225),
    (4.0, 1, 0.015474619979460686, 9.335270515159536),
];

pub const SPEC_REFS: [(f64, f64, f64, f64, u32, u32, u8, f64, f64); 60] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0, 0, 0.0, 8.156603957913983),
    (2.0, 1.0, 4.5, 0.0, 0, 1, 0, 0.0, 4.452986860293433),
    (2.0, 1.0, 4.5, 0.0, 0, 2, 1, 0.0, -2.4586187348508903),
    (2.0, 1.0, 4.5, 0.0, 0, 3, 2, 8.2915619758885, -7.5),
    (2.0, 1.0, 4.5, 0.0, 0, 4, 2, 13.06713434537198, -9.5),
    (2.0, 1.0, 4.5, 0.0, 0, 5, 2, 17.226433176952217, -11.5),
    (2.0, 1.0, 4.5, 0.0, 1, 0, 0, 0.0, 6.513878188659973),
    (2.0, 1.0, 4.5, 0.0, 1, 1, 0, 0.0, 1.7649820430708338),
    (2.0, 1.0, 4.5, 0.0, 1, 2, 1, 5.172040216394301, -6.5),
    (2.0, 1.0, 4.5, 0.0, 1, 3, 2, 10.805091392487155, -8.5),
    (2.0, 1.0, 4.5, 0.0, 1, 4, 2, 15.190457530963313, -10.5),
    (2.0, 1.0, 4.5, 0.0, 1, 5, 2, 19.20286436967152, -12.5),
    (2.0, 1.0, 4.5, 0.3, 0, 0, 0, 0.0, 9.45851504903007),
    (2.0, 1.0, 4.5, 0.3, 0, 1, 0, 0.0, 4.892276929865179),
    (2.0, 1.0, 4.5, 0.3, 0, 2, 1, 0.0, -2.223787384819899),
    (2.0, 1.0, 4.5, 0.3, 0, 3, 1, 7.985957062499249, -10.714285714285714),
    (2.0, 1.0, 4.5, 0.3, 0, 4, 2, 13.735846147498709, -13.571428571428571),
    (2.0, 1.0, 4.5, 0.3, 0, 5, 2, 18.519157207428997, -16.428571428571427),
    (2.0, 1.0, 4.5, 0.3, 1, 0, 0, 0.0, 7.378364083397066),
    (2.0, 1.0, 4.5, 0.3, 1, 1, 0, 0.0, 1.8460516900426174),
    (2.0, 1.0, 4.5, 0.3, 1, 2, 1, 3.5138211074996697, -9.285714285714285),
    (2.0, 1.0, 4.5, 0.3, 1, 3, 1, 11.070276437748213, -12.142857142857142),
    (2.0, 1.0, 4.5, 0.3, 1, 4, 2, 16.19082632674618, -15.0),
    (2.0, 1.0, 4.5, 0.3, 1, 5, 2, 20.763488362498048, -17.857142857142858),
    (0.8, 0.7, 3.2, 0.0, 0, 0, 0, 0.0, 1.1156601764819891),
    (0.8, 0.7, 3.2, 0.0, 0, 1, 0, 0.0, 0.09048892932049606),
    (0.8, 0.7, 3.2, 0.0, 0, 2, 1, 0.0, -0.7468912361955471),
    (0.8, 0.7, 3.2, 0.0, 0, 3, 1, 0.0, -1.479630787310081),
    (0.8, 0.7, 3.2, 0.0, 0, 4, 1, 0.0, -2.1540814064309397),
    (0.8, 0.7, 3.2, 0.0, 0, 5, 1, 0.0, -2.794328396864964),
    (0.8, 0.7, 3.2, 0.0, 1, 0, 0, 0.0, 0.5728611667510395),
    (0.8, 0.7, 3.2, 0.0, 1, 1, 1, 0.0, -0.345488634360702),
    (0.8, 0.7, 3.2, 0.0, 1, 2, 1, 0.0, -1.1227439547066227),
    (0.8, 0.7, 3.2, 0.0, 1, 3, 1, 0.0, -1.8222785946723585),
    (0.8, 0.7, 3.2, 0.0, 1, 4, 1, 0.0, -2.4774971523866713),
    (0.8, 0.7, 3.2, 0.0, 1, 5, 1, 0.0, -3.1059160176340397),
    (1.0, 1.0, 4.5, 0.0, 0, 0, 0, 0.0, 3.5),
    (1.0, 1.0, 4.5, 0.0, 0, 1, 0, 0.0, 1.5),
    (1.0, 1.0, 4.5, 0.0, 0, 2, 1, 0.0, -0.5),
    (1.0, 1.0, 4.5, 0.0, 0, 3, 1, 0.0, -2.5),
    (1.0, 1.0, 4.5, 0.0, 0, 4, 1, 0.0, -4.5),
    (1.0, 1.0, 4.5, 0.0, 0, 5, 1, 0.0, -6.5),
    (1.0, 1.0, 4.5, 0.0, 1, 0, 0, 0.0, 2.5),
    (1.0, 1.0, 4.5, 0.0, 1, 1, 0, 0.0, 0.5),
    (1.0, 1.0, 4.5, 0.0, 1, 2, 1, 0.0, -1.5),
    (1.0, 1.0, 4.5, 0.0, 1, 3, 1, 0.0, -3.5),
    (1.0, 1.0, 4.5, 0.0, 1, 4, 1, 0.0, -5.5),
    (1.0, 1.0, 4.5, 0.0, 1, 5, 1, 0.0, -7.5),
    (4.0, 0.5, 5.5, 0.3, 0, 0, 0, 0.0, 12.857142857142858),
    (4.0, 0.5, 5.5, 0.3, 0, 1, 0, 0.0, 9.414876655437341),
    (4.0, 0.5, 5.5, 0.3, 0, 2, 0, 0.0, 3.0205879685449313),
    (4.0, 0.5, 5.5, 0.3, 0, 3, 2, 9.328199511290965, -5.357142857142857),
    (4.0, 0.5, 5.5, 0.3, 0, 4, 2, 16.24666370774791, -6.785714285714286),
    (4.0, 0.5, 5.5, 0.3, 0, 5, 2, 21.966463306688258, -8.214285714285714),
    (4.0, 0.5, 5.5, 0.3, 1, 0, 0, 0.0, 11.374406363816405),
    (4.0, 0.5, 5.5, 0.3, 1, 1, 0, 0.0, 6.80228219358878),
    (4.0, 0.5, 5.5, 0.3, 1, 2, 1, 3.7627334831616923, -4.642857142857142),
    (4.0, 0.5, 5.5, 0.3, 1, 3, 2, 13.049161361746506, -6.071428571428571),
    (4.0, 0.5, 5.5, 0.3, 1, 4, 2, 19.18425693858676, -7.5),
    (4.0, 0.5, 5.5, 0.3, 1, 5, 2, 24.645962537254558, -8.928571428571429),
];

pub const NORM_POLE_REFS: [(f64, f64, f64, f64, u32, u32, f64, f64); 15] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0, 3.359931701660473, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 1, 3.8501103431346904, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 2, 0.0, 4.949814814933439),
    (2.0, 1.0, 4.5, 0.3, 0, 0, 4.2374067876842085, 0.0),
    (2.0, 1.0, 4.5, 0.3, 0, 1, 4.417101202131828, 0.0),
    (2.0, 1.0, 4.5, 0.3, 0, 2, 0.0, 4.186918522199222),
    (0.8, 0.7, 3.2, 0.0, 0, 0, 2.4195306146839486, 0.0),
    (0.8, 0.7, 3.2, 0.0, 0, 1, 0.6620190311945575, 0.0),
    (0.8, 0.7, 3.2, 0.0, 0, 2, 0.0, 1.6964022924729105),
    (1.0, 1.0, 4.5, 0.0, 0, 0, 4.037012035232256, 0.0),
    (1.0, 1.0, 4.5, 0.0, 0, 1, 3.0277590264241923, 0.0),
    (1.0, 1.0, 4.5, 0.0, 0, 2, 0.0, 1.7841241161527712),
    (4.0, 0.5, 5.5, 0.3, 0, 0, 2.6678989303689136, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 1, 3.9133937504576104, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 2, 3.6982924670844537, 0.0),
];

pub const NORM_SCAT_REFS: [(f64, f64, f64, f64, u32, f64, f64, f64); 10] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0.48910632790835984, 0.38123806350555595, -3.4042535590601558e-53),
    (2.0, 1.0, 4.5, 0.0, 0, 0.7577202650054966, 0.577708891667672, -6.680119673069967e-53),
    (2.0, 1.0, 4.5, 0.3, 0, 0.48910632790835984, 0.380162396960737, -9.126395978907283e-54),
    (2.0, 1.0, 4.5, 0.3, 0, 0.7577202650054966, 0.5740998373075508, -2.0698858205248591e-53),
    (0.8, 0.7, 3.2, 0.0, 0, 0.48910632790835984, 1.679355305515699, -2.274759825016585e-52),
    (0.8, 0.7, 3.2, 0.0, 0, 0.7577202650054966, 2.074909168335734, 9.001257744752467e-52),
    (1.0, 1.0, 4.5, 0.0, 0, 0.48910632790835984, 1.196964345079277, -3.856422182196069e-52),
    (1.0, 1.0, 4.5, 0.0, 0, 0.7577202650054966, 1.552106458904316, 2.2111663890504895e-52),
    (4.0, 0.5, 5.5, 0.3, 0, 0.48910632790835984, 0.20989688735019213, 1.741028506762442e-53),
    (4.0, 0.5, 5.5, 0.3, 0, 0.7577202650054966, 0.3205175346637773, 1.8908642734880546e-53),
];

pub const WF_POLE_REFS: [(f64, f64, f64, f64, u32, u32, f64, f64, f64, f64, f64, f64, f64); 26] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0, 0.1, 0.8979089441223868, 0.0, 7.957830037730053, 0.0, -29.566049132416133, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 0, 0.5, 1.085049770224589, 0.0, -4.400163894773494, 0.0, 0.11569944347928184, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 0, 1.3, 0.0033624032028291566, 0.0, -0.027370843825860747, 0.0, 0.22236750256586926, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 0, 2.5, 1.891021260503766e-07, 0.0, -1.5424309399034012e-06, 0.0, 1.2580994918131372e-05, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 0, 6.0, 7.558022089384291e-20, 0.0, -6.164779288827321e-19, 0.0, 5.028366314691508e-18, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 2, 0.5, 0.0, -1.581206994811502, 0.0, -2.1836678376888097, 0.0, 95.47130421356182),
    (2.0, 1.0, 4.5, 0.0, 0, 2, 2.0, 0.0, 31.57121505219534, 0.0, 77.63667054467305, 0.0, 190.7953572909899),
    (2.0, 1.0, 4.5, 0.0, 0, 3, 0.5, -10.149662574600972, -9.154243442298748, 40.348082683973274, -165.1318745243295, 1939.5921313452961, -539.8628846026779),
    (2.0, 1.0, 4.5, 0.0, 0, 3, 2.0, -247221.0803682265, -705410.1421337851, 3994854.8731937422, -7340421.16376429, 90824906.42713642, -21929067.550111633),
    (2.0, 1.0, 4.5, 0.0, 0, 4, 0.5, 43.6680200399567, -20.75212564340396, 678.3345507234918, 473.21487251497933, -1263.615396042607, 13890.677931707032),
    (2.0, 1.0, 4.5, 0.0, 0, 4, 2.0, 44469089.509385966, 40037814.31493616, -100725962.08869112, 961444125.4420681, -13520237696.549633, 7817484727.725211),
    (2.0, 1.0, 4.5, 0.0, 1, 0, 0.5, 1.52444448625949, 0.0, -2.953054640301631, 0.0, -24.112296254428802, 0.0),
    (2.0, 1.0, 4.5, 0.0, 1, 0, 1.5, 0.005099912113894133, 0.0, -0.033202499430822534, 0.0, 0.21602017752054486, 0.0),
    (2.0, 1.0, 4.5, 0.3, 0, 0, 0.5, 1.0257906345001764, 0.0, -4.628854659024488, 0.0, 2.8791477097404963, 0.0),
    (2.0, 1.0, 4.5, 0.3, 0, 0, 2.0, 1.880208336126148e-06, 0.0, -1.778380596709484e-05, 0.0, 0.00016820537825946695, 0.0),
    (0.8, 0.7, 3.2, 0.0, 0, 1, 0.5, 0.13961334482159324, 0.0, 0.1829255328997164, 0.0, -0.5151690015081453, 0.0),
    (0.8, 0.7, 3.2, 0.0, 0, 1, 3.0, -0.24188757814926298, 0.0, -0.13526498151779637, 0.0, 0.1220942859071266, 0.0),
    (0.8, 0.7, 3.2, 0.0, 0, 1, 8.0, -0.282855819792345, 0.0, 0.024065587643900127, 0.0, -0.0006730790950741989, 0.0),
    (1.0, 1.0, 4.5, 0.0, 0, 0, 0.5, 1.2252773368959768, 0.0, 0.10344551693597612, 0.0, -8.839863073469438, 0.0),
    (1.0, 1.0, 4.5, 0.0, 0, 0, 2.0, 0.037679459743352677, 0.0, -0.12437271451642723, 0.0, 0.3956867803115559, 0.0),
    (1.0, 1.0, 4.5, 0.0, 0, 0, 5.0, 1.1465768108493067e-06, 0.0, -4.0124462549408115e-06, 0.0, 1.4040413004638485e-05, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 0, 0.35, 1.671131949833962, 0.0, -1.5865143597532794, 0.0, -35.04780464285191, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 0, 1.0, 0.008316283920667064, 0.0, -0.10636469508110331, 0.0, 1.3515882876159024, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 0, 4.0, 1.4805019361347914e-19, 0.0, -1.9035024893161604e-18, 0.0, 2.447360343406492e-17, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 2, 0.5, -0.520283014028264, 0.0, 10.6626369445699, 0.0, 65.72924386514802, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 2, 2.0, 0.04064651743900075, 0.0, -0.12277638118754497, 0.0, 0.37085685314224226, 0.0),
];

pub const WF_SCAT_REFS: [(f64, f64, f64, f64, u32, f64, f64, f64, f64, f64, f64, f64, f64); 7] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0.48910632790835984, 0.2, 0.09852558355412168, -9.854536227524752e-54, -0.43198789349675126, 3.8574226046182383e-53, -9.497221301045013, 8.480514542009585e-52),
    (2.0, 1.0, 4.5, 0.0, 0, 0.48910632790835984, 1.0, 0.1964328285286161, -1.7540408989750554e-53, 0.5101316703116654, -4.555205055547871e-53, -0.8694944851232047, 7.764124254399667e-53),
    (2.0, 1.0, 4.5, 0.0, 0, 0.48910632790835984, 3.0, 0.7580381282865185, -6.768878145046689e-53, 0.12178453666610514, -1.087471273387261e-53, -0.18134204590927036, 1.6192882198523892e-53),
    (0.8, 0.7, 3.2, 0.0, 0, 0.48910632790835984, 0.5, 0.35025273196597634, -1.7072657733596676e-52, 0.442188352913051, -5.98963362305262e-53, -1.3790791071576407, 1.868022650226841e-52),
    (0.8, 0.7, 3.2, 0.0, 0, 0.48910632790835984, 4.0, -0.6070679358988824, 8.222999308740457e-53, 0.1683868610180097, -2.280873292544816e-53, 0.2723706562613466, -3.689379039335885e-53),
    (4.0, 0.5, 5.5, 0.3, 0, 0.7577202650054966, 0.3, -0.0401326148230782, -3.4499219779756763e-54, -0.9640277946900015, -5.687194984639343e-53, 5.5673921542640565, 3.2844327634176423e-52),
    (4.0, 0.5, 5.5, 0.3, 0, 0.7577202650054966, 2.0, -0.5699934633401664, -3.362625002972879e-53, -0.42305445665626784, -2.495771592248058e-53, 0.32725613937090337, 1.9306180638921562e-53),
];

pub const R1_REFS: [(f64, f64, f64); 5] = [
    (2.0, 1.0, 0.45344984105855446),
    (2.0, 1.0, 0.45344984105855446),
    (0.8, 0.7, 1.1169696953977408),
    (1.0, 1.0, 0.6931471805599453),
    (4.0, 0.5, 0.5514868016649701),
];

pub const ASYM_POLE_REFS: [(f64, f64, f64, f64, u32, u32, f64, f64, f64, f64, f64, f64); 5] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0, 9.503321962271105, 0.0, 135.7115144074879, 0.0, 0.0, 0.0),
    (2.0, 1.0, 4.5, 0.0, 0, 2, 0.0, 14.000190485028282, 0.0, 0.2310937199580498, 0.0, 0.0),
    (2.0, 1.0, 4.5, 0.3, 0, 0, 10.027534651755053, 0.0, 308.8678826079858, 0.0, 0.0, 0.0),
    (0.8, 0.7, 3.2, 0.0, 0, 1, 0.33159158057750693, 0.0, -0.5869128211492957, 0.0, 0.0, 0.0),
    (4.0, 0.5, 5.5, 0.3, 0, 0, 8.928497559490747, 0.0, 3202.9765810033637, 0.0, 0.0, 0.0),
];

pub const ASYM_SCAT_REFS: [(f64, f64, f64, f64, u32, f64, f64, f64, f64, f64, f64, f64); 2] = [
    (2.0, 1.0, 4.5, 0.0, 0, 0.48910632790835984, 1.0783040798048251, -9.628683105959502e-53, -0.0846810803654424, -0.38985132771357445, -0.0846810803654424, 0.38985132771357445),
    (4.0, 0.5, 5.5, 0.3, 0, 0.7577202650054966, 1.0726568362257296, 6.328042212915405e-53, 0.26296691695275365, 0.3000055727486723, 0.26296691695275365, -0.3000055727486723),
];
