#![allow(clippy::approx_constant)]

//! Frozen reference values of ₂F₁ computed at 40 significant digits by an
//! independent arbitrary-precision implementation, including parameter sets
//! with integer `a−b` and `c−a−b`.

use gaussratio::hyp2f1_core::{
    abs2_on_cut, hyp2f1, hyp2f1_on_cut, hyp2f1_on_cut_extrapolated, Bank, Params,
};
use gaussratio::Complex64 as C;

const PLANE: &[(f64, f64, f64, f64, f64, f64, f64)] = &[
    (0.3, 0.45, 1.7, 0.3, 0.0, 1.0267851597990443, 0.0),
    (0.3, 0.45, 1.7, -0.7, 0.0, 0.9545705364019784, 0.0),
    (0.3, 0.45, 1.7, 0.9, 0.0, 1.1211858515844901, 0.0),
    (0.3, 0.45, 1.7, -3.0, 0.0, 0.8689505081535416, 0.0),
    (0.3, 0.45, 1.7, 0.5, 0.866, 1.0134836884399145, 0.08363182547143103),
    (0.3, 0.45, 1.7, 2.0, 0.5, 1.0926538950906868, 0.23064177249487902),
    (0.3, 0.45, 1.7, -20.0, 1.0, 0.6780302822241067, 0.005605038032123295),
    (0.3, 0.45, 1.7, 0.0, 0.99, 0.9785210598468042, 0.06858946455043108),
    (0.3, 0.45, 1.7, 1.2, -0.1, 1.1733970511880547, -0.09624397077357237),
    (0.3, 0.45, 1.7, 5.0, -3.0, 0.8868772751715391, -0.3072576806793919),
    (0.3, 0.45, 1.7, -0.4, 0.6, 0.9663410667672088, 0.03617301751764359),
    (0.5, 0.5, 1.0, 0.3, 0.0, 1.0910959103627815, 0.0),
    (0.5, 0.5, 1.0, -0.7, 0.0, 0.8719279330145039, 0.0),
    (0.5, 0.5, 1.0, 0.9, 0.0, 1.6412644143423707, 0.0),
    (0.5, 0.5, 1.0, -3.0, 0.0, 0.6864402503091751, 0.0),
    (0.5, 0.5, 1.0, 0.5, 0.866, 0.9827474527704909, 0.26332227210102077),
    (0.5, 0.5, 1.0, 2.0, 0.5, 0.8506751691484026, 0.6877001768089847),
    (0.5, 0.5, 1.0, -20.0, 1.0, 0.4071018430454163, 0.0065005027437056015),
    (0.5, 0.5, 1.0, 0.0, 0.99, 0.9061489000238592, 0.1869678027612621),
    (0.5, 0.5, 1.0, 1.2, -0.1, 1.3429601742030455, -0.7980667488736779),
    (0.5, 0.5, 1.0, 5.0, -3.0, 0.5121072288210063, -0.48254660016853956),
    (0.5, 0.5, 1.0, -0.4, 0.6, 0.8948496933918064, 0.09570516958729385),
    (1.0, 1.0, 2.0, 0.3, 0.0, 1.1889164797957745, 0.0),
    (1.0, 1.0, 2.0, -0.7, 0.0, 0.7580403586602434, 0.0),
    (1.0, 1.0, 2.0, 0.9, 0.0, 2.5584278811044956, 0.0),
    (1.0, 1.0, 2.0, -3.0, 0.0, 0.4620981203732969, 0.0),
    (1.0, 1.0, 2.0, 0.5, 0.866, 0.9069129836688755, 0.5235964103353621),
    (1.0, 1.0, 2.0, 2.0, 0.5, 0.2625479931718315, 1.2733355240015356),
    (1.0, 1.0, 2.0, -20.0, 1.0, 0.15202165068342635, 0.005221927370322147),
    (1.0, 1.0, 2.0, 0.0, 0.99, 0.7882556364309453, 0.3450239133745514),
    (1.0, 1.0, 2.0, 1.2, -0.1, 1.4242992197181334, -2.112929268847645),
    (1.0, 1.0, 2.0, 5.0, -3.0, -0.01626220375826398, -0.5093756312142601),
    (1.0, 1.0, 2.0, -0.4, 0.6, 0.7908625171282573, 0.1740643099796773),
    (-1.7, -1.4, -2.6, 0.3, 0.0, 0.7322639146161076, 0.0),
    (-1.7, -1.4, -2.6, -0.7, 0.0, 1.6812117590663151, 0.0),
    (-1.7, -1.4, -2.6, 0.9, 0.0, 0.20521987203582348, 0.0),
    (-1.7, -1.4, -2.6, -3.0, 0.0, 4.460168913567693, 0.0),
    (-1.7, -1.4, -2.6, 0.5, 0.866, 0.5060353950281347, -0.7126876573734428),
    (-1.7, -1.4, -2.6, 2.0, 0.5, -0.2493876390019354, -0.23613514006490066),
    (-1.7, -1.4, -2.6, -20.0, 1.0, 42.434921468043136, -2.9437347311422166),
    (-1.7, -1.4, -2.6, 0.0, 0.99, 0.9156320335771281, -0.9035555624494048),
    (-1.7, -1.4, -2.6, 1.2, -0.1, 0.03006391308543159, 0.20339582274643203),
    (-1.7, -1.4, -2.6, 5.0, -3.0, -3.2990880730613137, -1.0264028860375622),
    (-1.7, -1.4, -2.6, -0.4, 0.6, 1.3489818661511541, -0.5890441042662009),
    (2.5, 0.5, 1.0, 0.3, 0.0, 1.608660993151507, 0.0),
    (2.5, 0.5, 1.0, -0.7, 0.0, 0.5496158952090869, 0.0),
    (2.5, 0.5, 1.0, 0.9, 0.0, 46.10602413463712, 0.0),
    (2.5, 0.5, 1.0, -3.0, 0.0, 0.2640392343888271, 0.0),
    (2.5, 0.5, 1.0, 0.5, 0.866, 0.19575063800944656, 0.7305423782318843),
    (2.5, 0.5, 1.0, 2.0, 0.5, 0.13613708393961027, 0.08234663780844857),
    (2.5, 0.5, 1.0, -20.0, 1.0, 0.09610619416634422, 0.0024678670864080625),
    (2.5, 0.5, 1.0, 0.0, 0.99, 0.3878574656575926, 0.4341092206704673),
    (2.5, 0.5, 1.0, 1.2, -0.1, 4.182072338868414, 5.866642495264679),
    (2.5, 0.5, 1.0, 5.0, -3.0, 0.043217902016310775, -0.15879762226354788),
    (2.5, 0.5, 1.0, -0.4, 0.6, 0.5407073472691665, 0.2456732464590318),
    (0.3, 1.3, 2.6, 0.3, 0.0, 1.0517539092989696, 0.0),
    (0.3, 1.3, 2.6, -0.7, 0.0, 0.9173083087427125, 0.0),
    (0.3, 1.3, 2.6, 0.9, 0.0, 1.255447800379099, 0.0),
    (0.3, 1.3, 2.6, -3.0, 0.0, 0.7766959990582318, 0.0),
    (0.3, 1.3, 2.6, 0.5, 0.866, 1.0144359094245623, 0.1606676951885189),
    (0.3, 1.3, 2.6, 2.0, 0.5, 1.0892312934935888, 0.48638781937309),
    (0.3, 1.3, 2.6, -20.0, 1.0, 0.5204097721822691, 0.006551439352853012),
    (0.3, 1.3, 2.6, 0.0, 0.99, 0.9531956941223653, 0.12463730630927691),
    (0.3, 1.3, 2.6, 1.2, -0.1, 1.3562464677150738, -0.24921897214942396),
    (0.3, 1.3, 2.6, 5.0, -3.0, 0.6976996512662719, -0.46308071301939735),
    (0.3, 1.3, 2.6, -0.4, 0.6, 0.9362724328860166, 0.06460569646434905),
    (0.25, 0.75, 1.0, 0.3, 0.0, 1.0679580343293542, 0.0),
    (0.25, 0.75, 1.0, -0.7, 0.0, 0.9030964790927185, 0.0),
    (0.25, 0.75, 1.0, 0.9, 0.0, 1.468223828302127, 0.0),
    (0.25, 0.75, 1.0, -3.0, 0.0, 0.7588542747027055, 0.0),
    (0.25, 0.75, 1.0, 0.5, 0.866, 0.9903130841580418, 0.19727490063991196),
    (0.25, 0.75, 1.0, 2.0, 0.5, 0.911423201547731, 0.513560996262588),
    (0.25, 0.75, 1.0, -20.0, 1.0, 0.5265895503038753, 0.005738307960514359),
    (0.25, 0.75, 1.0, 0.0, 0.99, 0.931161434976717, 0.1417690203888646),
    (0.25, 0.75, 1.0, 1.2, -0.1, 1.2641183209892712, -0.5736255007832639),
    (0.25, 0.75, 1.0, 5.0, -3.0, 0.6477010415604925, -0.3891885435085735),
    (0.25, 0.75, 1.0, -0.4, 0.6, 0.9211190329100127, 0.07280428008161763),
    (1.5, 0.5, 1.2, 0.3, 0.0, 1.2537166653276928, 0.0),
    (1.5, 0.5, 1.2, -0.7, 0.0, 0.7226779114583188, 0.0),
    (1.5, 0.5, 1.2, 0.9, 0.0, 4.798953076153561, 0.0),
    (1.5, 0.5, 1.2, -3.0, 0.0, 0.43951349880748314, 0.0),
    (1.5, 0.5, 1.2, 0.5, 0.866, 0.772180125280786, 0.5913684298291936),
    (1.5, 0.5, 1.2, 2.0, 0.5, -0.04829970305718558, 0.7612323150768361),
    (1.5, 0.5, 1.2, -20.0, 1.0, 0.17918560506637762, 0.004454899142766527),
    (1.5, 0.5, 1.2, 0.0, 0.99, 0.7102733947325321, 0.3644714366552853),
    (1.5, 0.5, 1.2, 1.2, -0.1, -0.7571351975759464, -2.1300936253386804),
    (1.5, 0.5, 1.2, 5.0, -3.0, 0.0765856235898308, -0.34208609217746394),
    (1.5, 0.5, 1.2, -0.4, 0.6, 0.7462027402612486, 0.1863361453949762),
    (0.3, 0.7, 1.9, 0.3, 0.0, 1.0376942914751008, 0.0),
    (0.3, 0.7, 1.9, -0.7, 0.0, 0.9378767106368917, 0.0),
    (0.3, 0.7, 1.9, 0.9, 0.0, 1.1786297224210023, 0.0),
    (0.3, 0.7, 1.9, -3.0, 0.0, 0.8262198694875572, 0.0),
    (0.3, 0.7, 1.9, 0.5, 0.866, 1.0148630876279792, 0.11731022742905009),
    (0.3, 0.7, 1.9, 2.0, 0.5, 1.0998872550399663, 0.33730934939406587),
    (0.3, 0.7, 1.9, -20.0, 1.0, 0.5988661666242163, 0.006276018655286084),
    (0.3, 0.7, 1.9, 0.0, 0.99, 0.9679103618553825, 0.09371675704134488),
    (0.3, 0.7, 1.9, 1.2, -0.1, 1.249132068093264, -0.15868688949740326),
    (0.3, 0.7, 1.9, 5.0, -3.0, 0.8104941426552524, -0.3886093966594417),
    (0.3, 0.7, 1.9, -0.4, 0.6, 0.9531021971389192, 0.049027726538740594),
    (-0.5, 0.2, 0.7, 0.3, 0.0, 0.9545410074167513, 0.0),
    (-0.5, 0.2, 0.7, -0.7, 0.0, 1.0902343636549587, 0.0),
    (-0.5, 0.2, 0.7, 0.9, 0.0, 0.8334934394181062, 0.0),
    (-0.5, 0.2, 0.7, -3.0, 0.0, 1.3151161103870237, 0.0),
    (-0.5, 0.2, 0.7, 0.5, 0.866, 0.9506282727804246, -0.13952923855754448),
    (-0.5, 0.2, 0.7, 2.0, 0.5, 0.7197104909946785, -0.24416061503734096),
    (-0.5, 0.2, 0.7, -20.0, 1.0, 2.2421002622307373, -0.04064333017824148),
    (-0.5, 0.2, 0.7, 0.0, 0.99, 1.020854594995735, -0.13373273493426316),
    (-0.5, 0.2, 0.7, 1.2, -0.1, 0.7609537978936861, 0.06764683953949442),
    (-0.5, 0.2, 0.7, 5.0, -3.0, 0.7867847081859084, 0.6763163014546947),
    (-0.5, 0.2, 0.7, -0.4, 0.6, 1.0594109297181924, -0.07491466597448003),
    (2.0, 3.0, 4.5, 0.3, 0.0, 1.5883503334090985, 0.0),
    (2.0, 3.0, 4.5, -0.7, 0.0, 0.47915777050061314, 0.0),
    (2.0, 3.0, 4.5, 0.9, 0.0, 12.862862523589223, 0.0),
    (2.0, 3.0, 4.5, -3.0, 0.0, 0.1305351812532532, 0.0),
    (2.0, 3.0, 4.5, 0.5, 0.866, 0.19319096661945576, 1.1019472074571512),
    (2.0, 3.0, 4.5, 2.0, 0.5, -1.6454887608816975, -0.9398948270022661),
    (2.0, 3.0, 4.5, -20.0, 1.0, 0.007499830640540717, 0.0006518906240778251),
    (2.0, 3.0, 4.5, 0.0, 0.99, 0.3050418684604379, 0.5921852736241001),
    (2.0, 3.0, 4.5, 1.2, -0.1, -10.389795941143568, -5.304203245115387),
    (2.0, 3.0, 4.5, 5.0, -3.0, -0.07541491950644402, 0.13396791212772924),
    (2.0, 3.0, 4.5, -0.4, 0.6, 0.47836881043050467, 0.30941713985185515),
    (0.5, 2.5, 1.5, 0.3, 0.0, 1.3659755535250213, 0.0),
    (0.5, 2.5, 1.5, -0.7, 0.0, 0.6616952844957705, 0.0),
    (0.5, 2.5, 1.5, 0.9, 0.0, 12.649110640673522, 0.0),
    (0.5, 2.5, 1.5, -3.0, 0.0, 0.375, 0.0),
    (0.5, 2.5, 1.5, 0.5, 0.866, 0.5773650885529253, 0.6666776669490053),
    (0.5, 2.5, 1.5, 2.0, 0.5, -0.0358108500006674, 0.39714841233752246),
    (0.5, 2.5, 1.5, -20.0, 1.0, 0.1488041841712159, 0.0037054725055280786),
    (0.5, 2.5, 1.5, 0.0, 0.99, 0.5975675492902746, 0.39767442427624117),
    (0.5, 2.5, 1.5, 1.2, -0.1, -1.6960261993520929, 1.048201837009898),
    (0.5, 2.5, 1.5, 5.0, -3.0, 0.06976786907707269, -0.26587214972614187),
    (0.5, 2.5, 1.5, -0.4, 0.6, 0.6747577547489689, 0.20980605358241278),
];
const CUT: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.3, 0.45, 1.7, 1.0001, 1.165558849563415, 7.841059452547185e-05),
    (0.3, 0.45, 1.7, 1.3, 1.205879267494739, 0.12431402534918051),
    (0.3, 0.45, 1.7, 2.0, 1.1528297510711685, 0.2617789447639208),
    (0.3, 0.45, 1.7, 10.0, 0.8031622192920613, 0.43121187553969986),
    (0.3, 0.45, 1.7, 10000.0, 0.11387255743729309, 0.12630945539417926),
    (0.5, 0.5, 1.0, 1.0001, 3.8142053588218463, 0.9999750014061524),
    (0.5, 0.5, 1.0, 1.3, 1.2241694439614106, 0.9355074856143313),
    (0.5, 0.5, 1.0, 2.0, 0.8346268416740732, 0.8346268416740732),
    (0.5, 0.5, 1.0, 10.0, 0.32461161058314025, 0.5190133791904218),
    (0.5, 0.5, 1.0, 10000.0, 0.010000250014063477, 0.03814364242073591),
    (1.0, 1.0, 2.0, 1.0001, 9.20941943003329, 3.1412785257372193),
    (1.0, 1.0, 2.0, 1.3, 0.926132926404566, 2.4166097335306103),
    (1.0, 1.0, 2.0, 2.0, 7.853981633974483e-36, 1.5707963267948966),
    (1.0, 1.0, 2.0, 10.0, -0.21972245773362195, 0.3141592653589793),
    (1.0, 1.0, 2.0, 10000.0, -0.000921024036697585, 0.0003141592653589793),
    (-1.7, -1.4, -2.6, 1.0001, 0.03070370338620491, -0.004712019289488924),
    (-1.7, -1.4, -2.6, 1.3, -0.011927679258404975, -0.202290187178727),
    (-1.7, -1.4, -2.6, 2.0, -0.10214229049602709, -0.13068419852340954),
    (-1.7, -1.4, -2.6, 10.0, -0.3057390432669635, 7.9715342831377685),
    (-1.7, -1.4, -2.6, 10000.0, 311812.97584011784, 601907.295836088),
    (2.5, 0.5, 1.0, 1.0001, 42438136.350034006, 0.3749843760253137),
    (2.5, 0.5, 1.0, 1.3, 3.9678111247644896, 0.3356770571849094),
    (2.5, 0.5, 1.0, 2.0, 0.2782089472246911, 0.2782089472246911),
    (2.5, 0.5, 1.0, 10.0, 0.0014765757815074145, 0.13149164250876322),
    (2.5, 0.5, 1.0, 10000.0, 3.7507813696450584e-11, 0.004244025809788711),
    (0.3, 1.3, 2.6, 1.0001, 1.3657906434035354, 0.00016725828891534663),
    (0.3, 1.3, 2.6, 1.3, 1.4185641658448664, 0.33964323025537413),
    (0.3, 1.3, 2.6, 2.0, 1.1800491392541632, 0.6012650681039913),
    (0.3, 1.3, 2.6, 10.0, 0.5056353662783187, 0.5561695942346566),
    (0.3, 1.3, 2.6, 10000.0, 0.05066278556144391, 0.06971338543329751),
    (0.25, 0.75, 1.0, 1.0001, 3.0090901512356742, 0.7070935236594111),
    (0.25, 0.75, 1.0, 1.3, 1.1842804163605694, 0.6727596371592952),
    (0.25, 0.75, 1.0, 2.0, 0.908523071639793, 0.6183718495714029),
    (0.25, 0.75, 1.0, 10.0, 0.5108054588215334, 0.4402742611307829),
    (0.25, 0.75, 1.0, 10000.0, 0.08365442459748702, 0.0832730304131145),
    (1.5, 0.5, 1.2, 1.0001, -871.7208653232723, 634.0238391982742),
    (1.5, 0.5, 1.2, 1.3, -1.0006363436768115, 1.3373406376456223),
    (1.5, 0.5, 1.2, 2.0, -0.2579185811690112, 0.6942075842430739),
    (1.5, 0.5, 1.2, 10.0, -0.013176568414804014, 0.2523779093334113),
    (1.5, 0.5, 1.2, 10000.0, -3.7615586258064005e-07, 0.007980670152079618),
    (0.3, 0.7, 1.9, 1.0001, 1.2531332173867114, 0.00020319534762855082),
    (0.3, 0.7, 1.9, 1.3, 1.2925342309803254, 0.20972218955870886),
    (0.3, 0.7, 1.9, 2.0, 1.1762121670334658, 0.39781575846258355),
    (0.3, 0.7, 1.9, 10.0, 0.6766346665736556, 0.5147925551491368),
    (0.3, 0.7, 1.9, 10000.0, 0.06942822457941497, 0.09221686458511477),
    (-0.5, 0.2, 0.7, 1.0001, 0.7975293086172419, -2.5057204066074013e-05),
    (-0.5, 0.2, 0.7, 1.3, 0.7223390697859355, -0.0693412406510816),
    (-0.5, 0.2, 0.7, 2.0, 0.6442564746614777, -0.20066879242531996),
    (-0.5, 0.2, 0.7, 10.0, 0.45342792628983963, -0.977446863792218),
    (-0.5, 0.2, 0.7, 10000.0, 0.11320732254807316, -39.89251106365388),
    (2.0, 3.0, 4.5, 1.0001, -34.98600335936011, 1030.0621885899436),
    (2.0, 3.0, 4.5, 1.3, -11.845609093966905, -1.502646515726862),
    (2.0, 3.0, 4.5, 2.0, -1.4740941355924015, -2.733414307656026),
    (2.0, 3.0, 4.5, 10.0, 0.0549642497027892, -0.0380308457050007),
    (2.0, 3.0, 4.5, 10000.0, 4.385625724323646e-08, -4.1230310970007705e-11),
    (0.5, 2.5, 1.5, 1.0001, -4.9996666666680435e-26, -333266.66666672175),
    (0.5, 2.5, 1.5, 1.3, -8.114408259335791e-35, -0.811440825933579),
    (0.5, 2.5, 1.5, 2.0, -1.6666666666666666e-36, 0.3333333333333333),
    (0.5, 2.5, 1.5, 10.0, 1.0288065843621398e-37, 0.20987654320987653),
    (0.5, 2.5, 1.5, 10000.0, 3.333333270818529e-42, 0.006666666641662499),
];

fn rel(x: C, y: C) -> f64 {
    (x - y).norm() / y.norm()
}

#[test]
fn plane_values_match_reference() {
    let mut worst: f64 = 0.0;
    for &(a, b, c, zr, zi, vr, vi) in PLANE {
        let p = Params::new(a, b, c).unwrap();
        let got = hyp2f1(&p, C::new(zr, zi), 1e-15).unwrap();
        let e = rel(got, C::new(vr, vi));
        assert!(e < 1e-11, "({a},{b};{c};{zr}+{zi}i): {got} vs {vr}+{vi}i, rel {e:e}");
        worst = worst.max(e);
    }
    println!("worst relative error {worst:e}");
}

#[test]
fn cut_values_match_reference() {
    for &(a, b, c, x, vr, vi) in CUT {
        let p = Params::new(a, b, c).unwrap();
        let up = hyp2f1_on_cut(&p, x, Bank::Upper, 1e-15).unwrap();
        let e = rel(up, C::new(vr, vi));
        assert!(e < 1e-10, "({a},{b};{c};{x}): {up} vs {vr}+{vi}i, rel {e:e}");
        let lo = hyp2f1_on_cut(&p, x, Bank::Lower, 1e-15).unwrap();
        assert!(rel(lo, up.conj()) < 1e-14);
        let sq = abs2_on_cut(&p, x, 1e-15).unwrap();
        assert!((sq - up.norm_sqr()).abs() < 1e-9 * sq, "abs2 ({a},{b};{c};{x}): {sq} vs {}", up.norm_sqr());
    }
}

#[test]
fn squared_modulus_close_to_one() {
    for eta in [0.002, -0.002, 0.1, -0.997] {
        let p = Params::new(0.3, 0.6, 0.9 + eta).unwrap();
        for xm1 in [1e-3, 1e-9, 1e-15] {
            let sq = gaussratio::hyp2f1_core::abs2_on_cut_offset(&p, xm1, 1e-15).unwrap();
            let up = gaussratio::hyp2f1_core::hyp2f1_on_cut_offset(&p, xm1, Bank::Upper, 1e-15).unwrap();
            assert!((sq - up.norm_sqr()).abs() < 1e-10 * sq, "η = {eta}, x − 1 = {xm1}");
        }
    }
}

#[test]
fn extrapolated_cut_values_match_reference_away_from_one() {
    for &(a, b, c, x, vr, vi) in CUT {
        if !(1.2..=100.0).contains(&x) {
            continue;
        }
        let p = Params::new(a, b, c).unwrap();
        let v = hyp2f1_on_cut_extrapolated(&p, x, Bank::Upper, 1e-12).unwrap();
        let e = rel(v, C::new(vr, vi));
        assert!(e < 1e-8, "({a},{b};{c};{x}): {v} rel {e:e}");
    }
}
