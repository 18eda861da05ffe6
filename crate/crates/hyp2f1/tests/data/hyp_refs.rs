// generated by tools/oracle/gen_hyp2f1_refs.py; do not edit by hand

pub const HYP_REFS: [(f64, f64, f64, f64, f64, f64, f64, f64, f64, f64, f64); 32] = [
    (1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 0.5, 0.0, 1.3862943611198906, 0.0, 1e-13),
    (0.3, 0.4, 0.8, -0.2, 1.1, 0.3, 0.25, -0.3, 1.1274444805667883, -0.10010821896269219, 1e-13),
    (-0.7, 0.1, 1.4, 0.6, 0.9, -0.8, -0.2, 0.35, 1.3364714552628558, -0.020668033225868868, 1e-13),
    (2.0, -1.0, 1.5, 1.0, 0.4, 0.4, 0.4, 0.1, 14.817152061556735, -2.877774820681178, 1e-12),
    (1.0, 0.0, 1.0, 0.0, 2.0, 0.0, -3.0, 0.0, 0.4620981203732969, 0.0, 1e-13),
    (0.5, 0.2, 0.9, -0.4, 1.3, 0.1, -5.5, 2.0, 0.4053637409113694, 0.06936833824125506, 1e-13),
    (1.2, 0.3, 0.7, 0.7, 1.8, -0.5, 0.3, -0.62, 1.6822707276282485, -0.13323995064181446, 1e-13),
    (0.3, 0.4, 0.8, -0.2, 1.1, 0.3, 2.0, -1.5, 0.9745759599522537, -0.8742419001815992, 1e-12),
    (0.25, -0.7, 1.1, 0.2, 0.8, 0.5, -8.0, 3.0, -0.16781090654114186, 0.9891726948262545, 1e-12),
    (1.4, 0.4, 1.9, -0.6, 0.7, 0.2, 12.0, 5.0, -0.025802425887011038, 0.05366074271459777, 1e-12),
    (0.3, 0.4, 0.8, -0.2, 1.1, 0.3, 0.808, -0.44, 1.432060119307705, -0.32198349287046085, 1e-12),
    (0.2, 0.1, 0.6, -0.3, 1.2, 0.2, 1.000003, 2e-06, 1.241124258266914, -0.22791352027050302, 1e-12),
    (0.4, 0.2, 0.9, 0.1, 1.5, -0.3, -1.2, 1.6, 0.7211732269942314, -0.02234274592713029, 1e-12),
    (0.3, 0.4, 0.8, -0.2, 1.1, 0.3, 0.495, 0.8573651497465942, 0.8218760199609757, 0.3233824448326169, 1e-12),
    (0.6, -0.3, 1.2, 0.5, 0.9, 0.4, 0.505, -0.874685657822283, 0.3917433856887098, -0.4510669574142588, 1e-11),
    (0.5, 0.5, 0.5, -0.5, 1.5, 0.0, 0.5, 0.8660254037844386, 1.0002787967663385, 0.35842844906676463, 1e-12),
    (1.7, -1.2, 1.1, 1.9, 1.9, 1.3, 0.7, 0.6, -0.5209764539283386, 3.5913238633703313, 5e-12),
    (-1.8, 0.4, 1.3, -1.6, 1.2, 1.1, 2.4, -0.8, 0.13146054928098583, 14.292917442459666, 5e-12),
    (0.3, 0.2, 0.4, -0.1, 2.7000000000001, 0.10000000000010001, 1.7, 0.4, 1.0722943202480455, 0.12894854799774888, 1e-11),
    (0.3, 0.2, 2.3000000000000997, 0.2, 1.1, -0.4, 6.0, -2.0, -0.12355767813616961, -0.9229932310506481, 1e-11),
    (0.5, 0.0, 2.5, 0.0, 4.0, 0.0, 3.0, 1.0, 0.4641719059305907, 0.8760808244767794, 1e-12),
    (0.3, 0.4, 0.8, -0.2, 1.1, 0.3, 2.0, 0.0, 1.3554931728900927, -1.3304440061284584, 1e-11),
    (0.5, 0.1, 1.2, -0.3, 1.9, 0.2, 1.5, 0.0, 0.9732390123961503, -1.0028421903571234, 1e-11),
    (0.25, 0.0, 0.75, 0.0, 1.25, 0.0, 4.0, 0.0, 0.7895581944671004, -0.5214705826789594, 1e-11),
    (-3.0, 0.0, 1.7, 4.0, 2.4, -9.0, 2.5, -1.5, -3.7729210897229484, -3.3298471505501857, 1e-10),
    (-7.0, 0.0, 0.3, -8.5, 0.6, 7.0, -4.0, 2.0, 45638.79118988816, 22778.614147964377, 1e-10),
    (-2.0, 0.0, 3.0, 0.0, 1.5, 0.0, 7.0, 0.0, 129.8, 0.0, 1e-10),
    (0.8, 0.3, -5.0, 0.0, -9.0, 0.0, 1.1, 0.9, 0.8519686664105556, 1.0461034720257938, 1e-10),
    (-10.0, 0.0, 0.9, 0.9, 1.3, -0.5, 0.35, 0.1, -0.33112527111277906, -0.7742749087413476, 1e-10),
    (0.7, 0.3, 1.1, -0.2, 0.9, 0.1, 0.0, 0.0, 1.0, 0.0, 1e-15),
    (0.3, 0.1, 0.4, -0.2, 2.9, 0.3, 1.0, 0.0, 1.0657383236915423, -0.02166766121322819, 1e-12),
    (1.0, 0.0, 0.5, 0.0, 3.0, 0.0, 1.0, 0.0, 1.3333333333333333, 0.0, 1e-12),
];
