//! Bessel values, zeros and energy integrals checked against 50-digit
//! reference values.

use ite_engine::specfun::{
    bessel_energy, bessel_triple, bessel_zeros, count_zeros, Order, Scaled,
};

/// (2ν, x, J mantissa, J exponent, J' mantissa, J' exponent), value = m·2^e.
const BESSEL: &[(u32, f64, f64, i32, f64, i32)] = &[
    (0, 1e-30, 0.5, 1, -0.6338253001141148, -100),
    (0, 1e-05, 0.999999999975, 0, -0.655359999991808, -17),
    (0, 0.3, 0.9776262465382961, 0, -0.593275265092416, -2),
    (0, 1.0, 0.7651976865579666, 0, -0.880101171489867, -1),
    (0, 2.5, -0.774140423491168, -4, -0.9941882049285481, -1),
    (0, 5.0, -0.7103870852573532, -2, 0.6551582751829305, -1),
    (0, 10.0, -0.9837430578053934, -2, -0.695563938701783, -4),
    (0, 24.9, 0.665967746824124, -3, 0.5394227981256354, -2),
    (0, 25.1, 0.8662053719995956, -3, 0.9170782730753806, -3),
    (0, 40.0, 0.9429619947823731, -7, -0.50415327215034, -2),
    (0, 99.5, -0.6253781250381051, -5, 0.6213055859446155, -3),
    (0, 101.84852668, 0.5454126820190687, -3, -0.6458686544803875, -4),
    (0, 102.0, 0.9809556295714761, -4, -0.8019991381281643, -4),
    (0, 500.0, -0.545608910091712, -4, -0.6702472621038268, -6),
    (0, 1020.0, 0.7362980347145475, -7, -0.7780574326568981, -5),
    (0, 4000.0, -0.8069660722285668, -6, -0.8460693138554405, -11),
    (1, 1e-30, 0.8983381526791141, -50, 0.7086638483170175, 49),
    (1, 1e-05, 0.6459219256263956, -8, 0.9855986413319917, 7),
    (1, 0.3, 0.8609870346562492, -1, 0.6741793136284959, 0),
    (1, 1.0, 0.6713967071418031, 0, 0.7632041155797963, -3),
    (1, 2.5, 0.6040098121247314, -1, -0.9293585669030601, -1),
    (1, 5.0, -0.6843359695963236, -1, 0.5417380306596983, -2),
    (1, 10.0, -0.549054943020202, -2, -0.8193827181745825, -2),
    (1, 24.9, -0.590073001394832, -4, 0.6253056173895333, -2),
    (1, 25.1, -0.6673144792665539, -7, 0.6371088440042154, -2),
    (1, 40.0, 0.7520076991162686, -3, -0.6825093416501167, -3),
    (1, 99.5, -0.5489113285309878, -3, 0.6633325618835249, -4),
    (1, 101.84852668, 0.6123166702528712, -3, 0.6218222339619838, -5),
    (1, 102.0, 0.6287491851074087, -3, 0.9779514498596539, -7),
    (1, 500.0, -0.5341202935885753, -5, -0.5043399170606312, -4),
    (1, 1020.0, 0.6802147218248626, -5, -0.8407246197346574, -6),
    (1, 4000.0, -0.5518626084020174, -6, -0.5892919493302345, -6),
    (2, 1e-30, 0.6338253001141148, -100, 0.5, 0),
    (2, 1e-05, 0.655359999991808, -17, 0.9999999999625, -1),
    (2, 0.3, 0.593275265092416, -2, 0.9664603845892321, -1),
    (2, 1.0, 0.880101171489867, -1, 0.6502942016260661, -1),
    (2, 2.5, 0.9941882049285481, -1, -0.9888856698156304, -2),
    (2, 5.0, -0.6551582751829305, -1, -0.8966475503683621, -3),
    (2, 10.0, 0.695563938701783, -4, -0.5005660781364689, -1),
    (2, 24.9, -0.5394227981256354, -2, 0.709294879203693, -3),
    (2, 25.1, -0.9170782730753806, -3, 0.9027423549906466, -3),
    (2, 40.0, 0.50415327215034, -2, 0.5396393770621011, -7),
    (2, 99.5, -0.6213055859446155, -3, -0.600401016055407, -5),
    (2, 101.84852668, 0.6458686544803875, -4, 0.5422419505635727, -3),
    (2, 102.0, 0.8019991381281643, -4, 0.9730928929231607, -4),
    (2, 500.0, 0.6702472621038268, -6, -0.5459440337227639, -4),
    (2, 1020.0, 0.7780574326568981, -5, 0.7332468290962851, -7),
    (2, 4000.0, 0.8460693138554405, -11, -0.8069726821450812, -6),
    (3, 1e-30, 0.7591859323010652, -151, 0.8983381526791141, -51),
    (3, 1e-05, 0.564415190908449, -26, 0.6459219256220895, -9),
    (3, 0.3, 0.6929581106940531, -4, 0.8557764309449318, -2),
    (3, 1.0, 0.961191356493708, -2, 0.6218998969133251, -1),
    (3, 2.5, 0.5250802646640031, 0, -0.8347681751063172, -6),
    (3, 5.0, -0.678605224578963, -2, -0.5825451859094791, -1),
    (3, 10.0, 0.7919299710235724, -2, -0.6678444386737378, -2),
    (3, 24.9, -0.6282678312519572, -2, -0.8773663250778774, -5),
    (3, 25.1, -0.6375242539141174, -2, 0.5518554086966985, -7),
    (3, 40.0, 0.6919094378890701, -3, 0.7260610951954285, -3),
    (3, 99.5, -0.6688492586526805, -4, -0.5438697512044601, -3),
    (3, 101.84852668, -0.6097981686129244, -5, 0.614561909537955, -3),
    (3, 102.0, -0.9286377882826022, -7, 0.6296027124863449, -3),
    (3, 500.0, 0.5040728569138369, -4, -0.5371447307300583, -5),
    (3, 1020.0, 0.8413914969129171, -6, 0.6795960516065443, -5),
    (3, 4000.0, 0.5892229665041843, -6, -0.5520835670144564, -6),
    (4, 1e-30, 0.8034690221294952, -202, 0.6338253001141148, -101),
    (4, 1e-05, 0.8589934591928419, -36, 0.6553599999890773, -18),
    (4, 0.3, 0.7146151647400937, -6, 0.5910378929014206, -3),
    (4, 1.0, 0.9192278794552038, -3, 0.8409744635245302, -2),
    (4, 2.5, 0.8921181168792345, -1, 0.560987422850321, -2),
    (4, 5.0, 0.7450418604440354, -4, -0.6924103682051322, -1),
    (4, 10.0, 0.5092606273702412, -1, -0.954024520724824, -7),
    (4, 24.9, -0.7526220115832621, -3, -0.5091970145279141, -2),
    (4, 25.1, -0.9392793379816976, -3, -0.8422352979373967, -3),
    (4, 40.0, -0.5452670373673163, -9, 0.5043662670868116, -2),
    (4, 99.5, 0.5754239070727089, -5, -0.6241971633670914, -3),
    (4, 101.84852668, -0.5390712191080768, -3, 0.667040142637572, -4),
    (4, 102.0, -0.9652301562748454, -4, 0.8209252196237494, -4),
    (4, 500.0, 0.5462791573538158, -4, 0.6615067955861657, -6),
    (4, 1020.0, -0.7301956234780228, -7, 0.7784153716880148, -5),
    (4, 4000.0, 0.8069792920615958, -6, 0.8331576451824549, -11),
    (5, 1e-30, 0.7699060022130187, -253, 0.7591859323010652, -152),
    (5, 1e-05, 0.5918322232237089, -45, 0.5644151909068363, -27),
    (5, 0.3, 0.6669572750486189, -8, 0.6911690598791282, -5),
    (5, 1.0, 0.791948963655647, -4, 0.9324465084178573, -3),
    (5, 2.5, 0.6561828230688762, -1, 0.7879554125182602, -2),
    (5, 5.0, 0.9615088044452694, -2, -0.5796798134007989, -1),
    (5, 10.0, 0.7866339343272737, -2, 0.595271487441754, -2),
    (5, 24.9, 0.5745866473660908, -5, -0.6354790090552465, -2),
    (5, 25.1, -0.8855126483299754, -6, -0.6320118494797924, -2),
    (5, 40.0, -0.7001144912745884, -3, 0.7356665935937319, -3),
    (5, 99.5, 0.5388281738779324, -3, -0.6959260513098631, -4),
    (5, 101.84852668, -0.6168071488230389, -3, -0.5492369441230505, -5),
    (5, 102.0, -0.6304562398652812, -3, -0.6814000471589625, -7),
    (5, 500.0, 0.5401691678715413, -5, 0.5027224339941581, -4),
    (5, 1020.0, -0.678977381388226, -5, 0.8447198174099182, -6),
    (5, 4000.0, 0.5523045256268955, -6, 0.5888777761756675, -6),
    (10, 1e-30, 0.8729041621056381, -510, 0.8607499593623031, -408),
    (10, 1e-05, 0.5158083497000928, -94, 0.9838263505921041, -76),
    (10, 0.3, 0.6610676753389134, -20, 0.6875786897002714, -16),
    (10, 1.0, 0.5115038314726081, -11, 0.6286593602835369, -9),
    (10, 2.5, 0.624052004304103, -5, 0.5564580765639807, -4),
    (10, 5.0, 0.5222810922403401, -1, 0.5203672573539123, -2),
    (10, 10.0, -0.9362461127471745, -2, -0.8205753760688937, -3),
    (10, 24.9, -0.6419741018715396, -3, 0.5561809913442417, -2),
    (10, 25.1, -0.8191067275940426, -4, 0.6021520346438684, -2),
    (10, 40.0, 0.9805877278169423, -3, -0.5308548942504768, -4),
    (10, 99.5, -0.6356146969977005, -3, -0.5928091464287619, -6),
    (10, 101.84852668, 0.7697129918370779, -4, 0.9998120489212778, -4),
    (10, 102.0, 0.911680880614389, -4, 0.87113689931614, -4),
    (10, 500.0, 0.6176791318626793, -6, -0.549781654170678, -4),
    (10, 1020.0, 0.7801691372790898, -5, 0.6965741115144533, -7),
    (10, 4000.0, 0.7685968410795977, -11, -0.8070477644058494, -6),
    (15, 1e-30, 0.6111075177730192, -768, 0.9038978056083553, -666),
    (15, 1e-05, 0.5551755452007952, -145, 0.7941849878316302, -126),
    (15, 0.3, 0.807905298109781, -34, 0.6307303539324887, -29),
    (15, 1.0, 0.801526067253329, -21, 0.745518764774361, -18),
    (15, 2.5, 0.6461546065837777, -11, 0.920767641389036, -10),
    (15, 5.0, 0.5110524526957549, -4, 0.6026837660168093, -4),
    (15, 10.0, 0.572176972233729, -1, -0.8182690474687441, -3),
    (15, 24.9, 0.8147172337043167, -3, -0.9961786750076883, -3),
    (15, 25.1, 0.6027393551939529, -3, -0.5585251351960027, -2),
    (15, 40.0, -0.5042351114840868, -2, -0.5016230036861407, -5),
    (15, 99.5, 0.9382475785639929, -4, 0.8658720251549947, -4),
    (15, 101.84852668, -0.8833312596219025, -9, -0.6314151898972153, -3),
    (15, 102.0, -0.8708270122737203, -6, -0.6212239988484267, -3),
    (15, 500.0, -0.9777910249855843, -5, 0.5907153518403516, -5),
    (15, 1020.0, -0.8770936285871826, -6, -0.668205663098003, -5),
    (15, 4000.0, -0.5854839974472881, -6, 0.5560472810014646, -6),
    (20, 1e-30, 0.7740563060026375, -1028, 0.7632784478065914, -925),
    (20, 1e-05, 0.5405628010096675, -197, 0.515520859727308, -177),
    (20, 0.3, 0.8927522221468095, -49, 0.9295697323502026, -44),
    (20, 1.0, 0.5649202962300304, -31, 0.7029344954151883, -28),
    (20, 2.5, 0.5831992062504818, -18, 0.5664305281815333, -16),
    (20, 5.0, 0.7515149554229628, -9, 0.6616775282828132, -8),
    (20, 10.0, 0.8299444265334355, -2, 0.6749566290540895, -3),
    (20, 24.9, -0.7095104124642054, -3, 0.5272959093580701, -2),
    (20, 25.1, -0.9775205522273875, -4, 0.573332605181855, -2),
    (20, 40.0, 0.9550669022580877, -3, 0.6984682390733962, -4),
    (20, 99.5, -0.6499895835059772, -5, -0.6166513528378816, -3),
    (20, 101.84852668, -0.6612346385511139, -4, 0.5400226529124338, -3),
    (20, 102.0, -0.9817635748419544, -5, 0.5824761221052688, -3),
    (20, 500.0, 0.5597222000610417, -4, 0.8977966947041153, -7),
    (20, 1020.0, -0.5829449464268264, -7, 0.7861049488539906, -5),
    (20, 4000.0, 0.8072360383025023, -6, 0.5232228579228995, -11),
    (21, 1e-30, 0.7517171464489444, -1080, 0.7783128525609545, -977),
    (21, 1e-05, 0.7549153175813871, -208, 0.7559405169106752, -188),
    (21, 0.3, 0.8436111581498509, -52, 0.9223557871449095, -47),
    (21, 1.0, 0.9755051806798973, -34, 0.6375198204837143, -30),
    (21, 2.5, 0.8003808092964801, -20, 0.8184090890415283, -18),
    (21, 5.0, 0.7441947542952828, -10, 0.6966835590441595, -9),
    (21, 10.0, 0.652029465561303, -2, 0.6511901724752306, -3),
    (21, 24.9, -0.6082184499989144, -2, 0.5459000271987128, -3),
    (21, 25.1, -0.5441857534896639, -2, 0.7311044390758198, -3),
    (21, 40.0, 0.5298498840880961, -3, 0.8423196016439246, -3),
    (21, 99.5, 0.590044879073491, -4, -0.5681841843071117, -3),
    (21, 101.84852668, -0.6081945671406201, -3, 0.7269046344298885, -5),
    (21, 102.0, -0.5739055866312662, -3, 0.540270476977916, -4),
    (21, 500.0, 0.6417561223399456, -5, 0.9437311510311308, -5),
    (21, 1020.0, -0.6566055965170222, -5, 0.9127780142426887, -6),
    (21, 4000.0, 0.5599148651185836, -6, 0.5816463544064909, -6),
    (60, 1e-30, 0.7349139589162487, -3127, 0.5435108352095901, -3022),
    (60, 1e-05, 0.5005959155279284, -635, 0.7161082013052483, -614),
    (60, 0.3, 0.5668023731430872, -189, 0.8855858540620611, -183),
    (60, 1.0, 0.6068014987598523, -137, 0.5685704804415389, -132),
    (60, 2.5, 0.917640922830519, -98, 0.6859144352388828, -94),
    (60, 5.0, 0.7883923780384086, -68, 0.58329608612649, -65),
    (60, 10.0, 0.8527240869209187, -39, 0.6042474386372337, -37),
    (60, 24.9, 0.7043074771828559, -6, 0.9991614527227611, -7),
    (60, 25.1, 0.8103614439992566, -6, 0.561855745456775, -6),
    (60, 40.0, -0.8326875981251978, -3, 0.6322274817364685, -3),
    (60, 99.5, 0.6031804541439009, -3, 0.9637594155567435, -5),
    (60, 101.84852668, -0.6888607962996868, -5, -0.595074163488953, -3),
    (60, 102.0, -0.5203428992996102, -4, -0.5642465822631654, -3),
    (60, 500.0, 0.9423538210072928, -5, -0.6464024093159193, -5),
    (60, 1020.0, 0.6632237965068063, -7, 0.7818215015451255, -5),
    (60, 4000.0, 0.804855674687118, -6, -0.5145574158424325, -9),
    (101, 1e-30, 0.8340012619056245, -5300, 0.5191328908801253, -5194),
    (101, 1e-05, 0.7968285623936165, -1106, 0.9593926048487869, -1084),
    (101, 0.3, 0.836126083253678, -355, 0.5497869349300007, -347),
    (101, 1.0, 0.6840537181333984, -267, 0.5396573570829488, -261),
    (101, 2.5, 0.5636104527061202, -200, 0.7107027102949296, -196),
    (101, 5.0, 0.7276248351539052, -150, 0.9142009023822675, -147),
    (101, 10.0, 0.7134770712648179, -100, 0.8832843014859748, -98),
    (101, 24.9, 0.5762802335172765, -37, 0.5102070335342199, -36),
    (101, 25.1, 0.8196490408502382, -37, 0.7180834187030174, -36),
    (101, 40.0, 0.9709413025081829, -11, 0.7669577089791801, -11),
    (101, 99.5, 0.6428912207044457, -4, -0.5276515328447289, -3),
    (101, 101.84852668, -0.6784999434927078, -3, -0.6280533260261077, -9),
    (101, 102.0, -0.6741203434621661, -3, 0.5403990528351885, -6),
    (101, 500.0, 0.938485770014642, -8, -0.566519648928802, -4),
    (101, 1020.0, 0.7377017086711731, -7, 0.7773431238622297, -5),
    (101, 4000.0, 0.7087877911507487, -6, 0.7732479634520797, -7),
    (200, 1e-30, 0.683362055560046, -10590, 0.8423087652231083, -10484),
    (200, 1e-05, 0.6033049256203347, -2285, 0.7191955156568666, -2262),
    (200, 0.3, 0.7260424971612214, -798, 0.9453636228012334, -790),
    (200, 1.0, 0.5870013145542768, -624, 0.9171441474656803, -618),
    (200, 2.5, 0.6622719153602062, -492, 0.8275837167590265, -487),
    (200, 5.0, 0.6322265000981417, -392, 0.7893044578581841, -388),
    (200, 10.0, 0.5249597722630448, -292, 0.6529432805594225, -289),
    (200, 24.9, 0.8774087915277404, -163, 0.8534741474500146, -161),
    (200, 25.1, 0.9521194287824475, -162, 0.9182827291440675, -160),
    (200, 40.0, 0.7563457270499343, -98, 0.8673913433166203, -97),
    (200, 99.5, 0.6955419944364921, -3, 0.5998531486486838, -5),
    (200, 101.84852668, 0.5144090922716903, -2, 0.9332371512111038, -6),
    (200, 102.0, 0.5230185156539942, -2, 0.8848579650923271, -6),
    (200, 500.0, 0.5492725256792244, -4, -0.6919998089834232, -6),
    (200, 1020.0, 0.8007760239427432, -5, 0.9780305182619105, -10),
    (200, 4000.0, -0.5592708459815423, -7, 0.7573643652019141, -6),
    (201, 1e-30, 0.8672262850184389, -10644, 0.5371418099939502, -10537),
    (201, 1e-05, 0.5505016503763316, -2297, 0.659530351910842, -2274),
    (201, 0.3, 0.896468286110223, -803, 0.5865538105743751, -794),
    (201, 1.0, 0.661646711657957, -628, 0.5194705867179094, -621),
    (201, 2.5, 0.5901891761607098, -495, 0.7411979828163523, -490),
    (201, 5.0, 0.7969700447097869, -395, 0.9999660180032662, -391),
    (201, 10.0, 0.9367189149182713, -295, 0.5854856182839827, -291),
    (201, 24.9, 0.6216597199972315, -164, 0.6079211980700325, -162),
    (201, 25.1, 0.6773838398127812, -163, 0.6567928221222412, -161),
    (201, 40.0, 0.6880984004932758, -99, 0.7938047278112345, -98),
    (201, 99.5, 0.6207040860801997, -3, 0.5811204283411784, -5),
    (201, 101.84852668, 0.9643092083462814, -3, 0.5300158272750312, -5),
    (201, 102.0, 0.9840614693442253, -3, 0.5128563621123148, -5),
    (201, 500.0, 0.5368761231836514, -4, 0.8243792729682045, -6),
    (201, 1020.0, 0.5725331096711763, -5, 0.5577439660721678, -5),
    (201, 4000.0, -0.7291205750520883, -6, 0.6941899717513551, -7),
    (1000, 1e-30, 0.8264927943635343, -54096, 0.636706888594005, -53987),
    (1000, 1e-05, 0.8865416025216885, -12572, 0.6605249662113847, -12546),
    (1000, 0.3, 0.5600531226039668, -5135, 0.911544632154317, -5125),
    (1000, 1.0, 0.782291150050514, -4267, 0.7639546763570122, -4258),
    (1000, 2.5, 0.7610406727843585, -3606, 0.5945556083632855, -3598),
    (1000, 5.0, 0.7539532550879448, -3106, 0.5889965872929973, -3099),
    (1000, 10.0, 0.7262562362550571, -2606, 0.5672744222797154, -2600),
    (1000, 24.9, 0.5892404653254639, -1948, 0.738592876273443, -1944),
    (1000, 25.1, 0.5001857286916858, -1942, 0.6219576048902232, -1938),
    (1000, 40.0, 0.686710843542245, -1607, 0.5347767624353387, -1603),
    (1000, 99.5, 0.8681422872875114, -956, 0.5344313560705893, -953),
    (1000, 101.84852668, 0.6072733543026901, -939, 0.7297202677521255, -937),
    (1000, 102.0, 0.628495915447507, -938, 0.7540520063572372, -936),
    (1000, 500.0, 0.901712052509391, -4, 0.8319100946762797, -7),
    (1000, 1020.0, 0.5479403077045092, -5, -0.5739109050076137, -5),
    (1000, 4000.0, -0.8005005975389095, -6, -0.5055095040728413, -8),
    (2000, 1e-30, 0.8462460937402194, -109187, 0.6519242769020065, -109077),
    (2000, 1e-05, 0.9736811776562118, -26139, 0.7254490089835314, -26112),
    (2000, 0.3, 0.7772061385482536, -11266, 0.6324919462963182, -11254),
    (2000, 1.0, 0.7587179009542636, -9529, 0.7409350800529284, -9519),
    (2000, 2.5, 0.7208838439558908, -8207, 0.5631887448756906, -8198),
    (2000, 5.0, 0.7175159553459174, -7207, 0.5605523400786188, -7199),
    (2000, 10.0, 0.7042008573921601, -6207, 0.5501294387870118, -6200),
    (2000, 24.9, 0.6841657415304879, -4891, 0.8583757854649902, -4886),
    (2000, 25.1, 0.9933926359539312, -4880, 0.6182021761781737, -4874),
    (2000, 40.0, 0.9682652014776003, -4208, 0.755852386171647, -4203),
    (2000, 99.5, 0.7873119620536988, -2896, 0.9841820447229831, -2893),
    (2000, 101.84852668, 0.5512857840508344, -2862, 0.6730852634357811, -2859),
    (2000, 102.0, 0.6044769367224935, -2860, 0.7369208337895018, -2857),
    (2000, 500.0, 0.5891852650026022, -656, 0.5103474443183956, -655),
    (2000, 1020.0, -0.9288450001850712, -6, -0.6772588463975504, -6),
    (2000, 4000.0, -0.8200888184353377, -6, -0.8349849285275602, -11),
    (2001, 1e-30, 0.6815043535608654, -109242, 0.5252743626296053, -109132),
    (2001, 1e-05, 0.5638049887228274, -26152, 0.8405549693363736, -26126),
    (2001, 0.3, 0.6089743833492686, -11272, 0.9916647838185866, -11261),
    (2001, 1.0, 0.5426909249987532, -9534, 0.5302363276583312, -9524),
    (2001, 2.5, 0.8152819166633984, -8212, 0.6372554794356966, -8203),
    (2001, 5.0, 0.5737994102059372, -7211, 0.8969986689319602, -7204),
    (2001, 10.0, 0.7964236416958416, -6211, 0.6224860085834302, -6204),
    (2001, 24.9, 0.6105296534813801, -4894, 0.7663728731844901, -4889),
    (2001, 25.1, 0.8900288899742437, -4883, 0.5541545797151599, -4877),
    (2001, 40.0, 0.5476375274729393, -4210, 0.8554276843325634, -4206),
    (2001, 99.5, 0.7030378114021546, -2898, 0.8792786543310352, -2895),
    (2001, 101.84852668, 0.9961626626734231, -2865, 0.6084332180011058, -2861),
    (2001, 102.0, 0.5465471092478799, -2862, 0.6666349390486896, -2859),
    (2001, 500.0, 0.6096784162179819, -657, 0.5284502775678672, -656),
    (2001, 1020.0, -0.5838850639652332, -6, -0.691995773080805, -6),
    (2001, 4000.0, -0.6317925719753379, -6, -0.5068554159907939, -6),
    (4000, 1e-30, 0.6272527921000096, -220368, 0.9664359480047279, -220258),
    (4000, 1e-05, 0.830391315529793, -54272, 0.6186897423340327, -54244),
    (4000, 0.3, 0.5290982605037696, -24526, 0.8611625236887841, -24514),
    (4000, 1.0, 0.5043971005292539, -21052, 0.9851504638889091, -21042),
    (4000, 2.5, 0.9124866561072335, -18409, 0.7128796434242324, -18399),
    (4000, 5.0, 0.9103515839746238, -16409, 0.7112099535493759, -16400),
    (4000, 10.0, 0.9018611112244702, -14409, 0.7045701902531851, -14401),
    (4000, 24.9, 0.5171768279921997, -11776, 0.6490170238733115, -11770),
    (4000, 25.1, 0.5472116193752122, -11753, 0.6812357390670093, -11747),
    (4000, 40.0, 0.7477317497294192, -10409, 0.5840486431152608, -10403),
    (4000, 99.5, 0.6959297327330718, -7781, 0.8732015023205963, -7777),
    (4000, 101.84852668, 0.8151207841869613, -7714, 0.9991108066585767, -7710),
    (4000, 102.0, 0.9914414654891678, -7710, 0.6067107245098556, -7705),
    (4000, 500.0, 0.5588934859812276, -3166, 0.5411556005609385, -3164),
    (4000, 1020.0, 0.7076421552187194, -1258, 0.5968213774793606, -1257),
    (4000, 4000.0, 0.5961147156799036, -6, 0.5458367467451044, -6),
];

/// (2ν, s, j_{ν,s})
const ZEROS: &[(u32, usize, f64)] = &[
    (0, 1, 2.404825557695773),
    (0, 2, 5.520078110286311),
    (0, 3, 8.653727912911013),
    (0, 10, 30.634606468431976),
    (2, 1, 3.8317059702075125),
    (2, 2, 7.015586669815619),
    (2, 3, 10.173468135062722),
    (2, 10, 32.189679910974405),
    (5, 1, 5.76345919689455),
    (5, 2, 9.095011330476355),
    (5, 3, 12.322940970566583),
    (5, 10, 34.47048833128499),
    (20, 1, 14.475500686554541),
    (20, 2, 18.43346366696658),
    (20, 3, 22.0469853646978),
    (20, 10, 45.231574103535046),
    (201, 1, 109.35012893169248),
    (201, 2, 116.26328664640445),
    (201, 3, 122.10713096924877),
    (201, 10, 154.46817783610976),
];

/// (2ν, κ, mantissa, exponent) of ∫₀^κ t J_ν(t)² dt.
const ENERGY: &[(u32, f64, f64, i32)] = &[
    (0, 1.0, 0.7791720175281232, -1),
    (0, 30.0, 0.6064099723246481, 4),
    (2, 0.01, 0.6710774552767144, -30),
    (6, 2.0, 0.5928338956320105, -6),
    (20, 5.0, 0.7118052633084927, -18),
    (20, 9.5, 0.7430234049354748, -2),
    (20, 50.0, 0.9736282353448045, 4),
    (5, 3.0, 0.6295118743764501, -1),
    (41, 4.0, 0.7214636956123331, -87),
    (100, 10.0, 0.6392790163332331, -197),
    (200, 40.0, 0.6161961002301817, -193),
    (200, 150.0, 0.554328325951943, 6),
    (600, 80.0, 0.7518788127095095, -901),
    (2001, 300.0, 0.5313425284218085, -2663),
    (4000, 100.0, 0.5614900203092709, -15532),
    (80, 0.001, 0.5471684637767895, -1221),
    (15, 7.5, 0.5755101269864198, -1),
];

fn close(got: Scaled, want: Scaled, scale: f64) -> bool {
    if want.is_zero() {
        return got.to_f64().abs() <= 1e-14 * scale;
    }
    let rel = (got.ratio(want) - 1.0).abs();
    rel <= 1e-12 || (got.to_f64() - want.to_f64()).abs() <= 1e-14 * scale
}

#[test]
fn values_and_derivatives() {
    let mut worst: f64 = 0.0;
    for &(t, x, jm, je, dm, de) in BESSEL {
        let tr = bessel_triple(Order::from_twice(t), x).unwrap();
        let scale = 1f64.max(tr.below.to_f64().abs()).max(tr.above.to_f64().abs());
        let want = Scaled::new(jm, je);
        assert!(close(tr.at, want, scale), "J_{}({x}): got {:?}, want {:?}", t as f64 / 2.0, tr.at, want);
        let dwant = Scaled::new(dm, de);
        let d = tr.derivative();
        assert!(close(d, dwant, scale), "J'_{}({x}): got {:?}, want {:?}", t as f64 / 2.0, d, dwant);
        if !want.is_zero() {
            worst = worst.max((tr.at.ratio(want) - 1.0).abs());
        }
    }
    eprintln!("worst relative error {worst:e}");
}

#[test]
fn zeros_match_reference() {
    for &(t, s, z) in ZEROS {
        let o = Order::from_twice(t);
        let table = bessel_zeros(o, z + 1.0).unwrap();
        assert!(table.zeros.len() >= s);
        let got = table.zeros[s - 1];
        assert!((got - z).abs() < 1e-12 * z.max(1.0), "j_{},{s}: {got} vs {z}", o);
        assert_eq!(count_zeros(o, z + 1e-9).unwrap(), table.zeros.iter().filter(|&&w| w < z + 1e-9).count());
    }
}

#[test]
fn energy_integrals() {
    for &(t, k, m, e) in ENERGY {
        let got = bessel_energy(Order::from_twice(t), k).unwrap();
        let want = Scaled::new(m, e);
        let rel = (got.ratio(want) - 1.0).abs();
        assert!(rel < 1e-12, "2nu={t} kappa={k}: rel {rel:e}");
    }
}
