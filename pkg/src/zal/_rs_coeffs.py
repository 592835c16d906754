"""Chebyshev coefficients (in z = 1 - 2p on [-1, 1]) of the Riemann-Siegel
correction functions C_0 .. C_12. Generated by scripts/gen_rs_coefficients.py."""

CHEB = [
    [
        6.4266728623976838e-1,
        0.0,
        2.7197299999785507e-1,
        0.0,
        1.0738605819340284e-2,
        0.0,
        -1.3743815296336614e-3,
        0.0,
        -1.2468221880320677e-4,
        0.0,
        -5.764599706783048e-7,
        0.0,
        2.7280674295804522e-7,
        0.0,
        8.0779530595004706e-9,
        0.0,
        -2.0884608068869654e-10,
        0.0,
        -1.3115561854739527e-11,
        0.0,
        -1.4207987228087185e-14,
        0.0,
        1.0271701357931162e-14,
        0.0,
        1.3974598819518374e-16,
        0.0,
        -4.4841187339522883e-18,
        0.0,
        -1.1830599573845289e-19,
    ],
    [
        0.0,
        -1.0697913921003001e-2,
        0.0,
        -1.7170651243377884e-2,
        0.0,
        -2.7932111497884711e-3,
        0.0,
        3.6375653719275042e-5,
        0.0,
        2.7108955231150887e-5,
        0.0,
        1.0483749866752773e-6,
        0.0,
        -5.8864671665275718e-8,
        0.0,
        -4.3229672685027791e-9,
        0.0,
        1.1369591588273712e-11,
        0.0,
        6.6998339103553275e-12,
        0.0,
        1.0079997652808475e-13,
        0.0,
        -5.1524880092221163e-15,
        0.0,
        -1.5216954471836971e-16,
        0.0,
        1.8619464833687101e-18,
        0.0,
        1.1301846184246265e-19,
    ],
    [
        3.1461158539889123e-3,
        0.0,
        -2.3087838845307501e-3,
        0.0,
        5.769820766689844e-5,
        0.0,
        3.5238862023665901e-4,
        0.0,
        2.5246667458684434e-5,
        0.0,
        -3.4428211971931359e-6,
        0.0,
        -3.5350745566224589e-7,
        0.0,
        3.7308301837926254e-9,
        0.0,
        1.2776951864116635e-9,
        0.0,
        2.1874616204147058e-11,
        0.0,
        -1.914141096461037e-12,
        0.0,
        -6.5628831021685227e-14,
        0.0,
        1.2586009182411716e-15,
        0.0,
        8.1400766238814627e-17,
        0.0,
        -5.4238742754886074e-20,
        0.0,
        -5.7969801310865431e-20,
        0.0,
        -5.382916503746397e-22,
    ],
    [
        0.0,
        -7.1232562212038732e-5,
        0.0,
        -2.3234305298164808e-4,
        0.0,
        1.2929912045472475e-4,
        0.0,
        -1.8074496413671439e-5,
        0.0,
        -6.5261851872204395e-6,
        0.0,
        1.1696365378521986e-7,
        0.0,
        7.3494761265181259e-8,
        0.0,
        1.7750910077907071e-9,
        0.0,
        -2.5555529613265251e-10,
        0.0,
        -1.1376636600537299e-11,
        0.0,
        3.3498638985302769e-13,
        0.0,
        2.5537379354163892e-14,
        0.0,
        -6.7665007713218708e-17,
        0.0,
        -2.9768884719919728e-17,
        0.0,
        -2.9952208087566914e-19,
        0.0,
        2.0461188497575092e-20,
        0.0,
        4.0869264533289923e-22,
        0.0,
        -8.4476121091139217e-24,
    ],
    [
        1.676574524669686e-4,
        0.0,
        -2.2728768943416726e-4,
        0.0,
        6.477387188445696e-5,
        0.0,
        -8.4922005001254091e-6,
        0.0,
        -2.6161407245219077e-6,
        0.0,
        8.3367649687332145e-7,
        0.0,
        6.3247040375448326e-8,
        0.0,
        -1.0059949403001072e-8,
        0.0,
        -7.8226772041303331e-10,
        0.0,
        3.1676582853498603e-11,
        0.0,
        3.5006944702052895e-12,
        0.0,
        -1.431481451144375e-14,
        0.0,
        -7.2694027079217635e-15,
        0.0,
        -8.7805565948359568e-17,
        0.0,
        8.1502544749545796e-18,
        0.0,
        1.9208397058220861e-19,
        0.0,
        -5.1756552139529817e-21,
        0.0,
        -1.976773672440578e-22,
    ],
    [
        0.0,
        -8.8288452348089015e-5,
        0.0,
        1.5628684969328387e-5,
        0.0,
        1.8342447697160084e-7,
        0.0,
        -2.1097267874937542e-6,
        0.0,
        6.6570161740963875e-7,
        0.0,
        -2.771474120506843e-8,
        0.0,
        -1.8111249375764875e-8,
        0.0,
        5.7658908117159773e-10,
        0.0,
        1.8675033426083152e-10,
        0.0,
        1.1051608917093021e-13,
        0.0,
        -7.8706433680568237e-13,
        0.0,
        -1.4458350995655121e-14,
        0.0,
        1.581459190860953e-15,
        0.0,
        4.9106388303637896e-17,
        0.0,
        -1.6444201220666787e-18,
        0.0,
        -7.7780179175232322e-20,
        0.0,
        7.9322268796819346e-22,
        0.0,
        7.312657106954803e-23,
    ],
    [
        1.2189742141068971e-5,
        0.0,
        -1.3829760140503787e-5,
        0.0,
        5.11096730499826e-6,
        0.0,
        -2.0458136450386076e-6,
        0.0,
        4.9381366448320118e-7,
        0.0,
        -3.6187528349622814e-8,
        0.0,
        -1.2876905098079861e-8,
        0.0,
        2.5744121111448662e-9,
        0.0,
        1.3641457070791684e-10,
        0.0,
        -3.0324395740843821e-11,
        0.0,
        -1.3216671239902537e-12,
        0.0,
        1.3031652130009368e-13,
        0.0,
        6.6358835532006699e-15,
        0.0,
        -2.46003565479328e-16,
        0.0,
        -1.6815279208168834e-17,
        0.0,
        1.8937932080359403e-19,
        0.0,
        2.430650612737236e-20,
        0.0,
        4.6084861411931991e-23,
        0.0,
        -2.1956897626337115e-23,
        0.0,
        -2.2958803325968369e-25,
    ],
    [
        0.0,
        -1.2768657797438219e-5,
        0.0,
        3.8629338346415994e-6,
        0.0,
        -1.3693830936467879e-6,
        0.0,
        2.7647041682793492e-7,
        0.0,
        -1.028343682334521e-8,
        0.0,
        -1.1755066568169088e-8,
        0.0,
        3.0550489158469951e-9,
        0.0,
        -1.1430441899346973e-10,
        0.0,
        -5.1308186753601974e-11,
        0.0,
        2.8355099102514512e-12,
        0.0,
        4.2666541616499311e-13,
        0.0,
        -1.2763573008517375e-14,
        0.0,
        -1.8569080032462282e-15,
        0.0,
        1.5364287078977635e-17,
        0.0,
        4.4115590388538027e-18,
        0.0,
        2.2542348889637281e-20,
        0.0,
        -6.1742693006902169e-21,
        0.0,
        -8.8146394645479433e-23,
        0.0,
        5.3997527731751577e-24,
    ],
    [
        1.2285585088091079e-6,
        0.0,
        -1.1940986396077243e-6,
        0.0,
        -6.0999996539195175e-8,
        0.0,
        -8.8440639138859542e-9,
        0.0,
        3.169816317194402e-8,
        0.0,
        -1.4200472095883398e-8,
        0.0,
        3.1614105915471479e-9,
        0.0,
        -2.4436315262116083e-10,
        0.0,
        -4.3226312365634377e-11,
        0.0,
        9.0176819077394959e-12,
        0.0,
        1.4698907920008922e-13,
        0.0,
        -8.7033053824709761e-14,
        0.0,
        -8.3797708033731824e-16,
        0.0,
        3.8874550686659373e-16,
        0.0,
        6.2406850724701109e-18,
        0.0,
        -9.22917087555887e-19,
        0.0,
        -2.1592426398497922e-20,
        0.0,
        1.2647348127954672e-21,
        0.0,
        3.9909605998675124e-23,
        0.0,
        -1.0363603911456208e-24,
        0.0,
        -4.5361164772683679e-26,
    ],
    [
        0.0,
        -3.0207970438542929e-6,
        0.0,
        7.0695223242956434e-7,
        0.0,
        -2.2116520302528589e-7,
        0.0,
        6.5157976128039944e-8,
        0.0,
        -1.6208733981111749e-8,
        0.0,
        2.9485298342057303e-9,
        0.0,
        -2.3545287037397226e-10,
        0.0,
        -4.0510323455136873e-11,
        0.0,
        1.2906638267524488e-11,
        0.0,
        -7.5183279260201009e-13,
        0.0,
        -1.2819168042623588e-13,
        0.0,
        1.1897420906565733e-14,
        0.0,
        7.6260570296606159e-16,
        0.0,
        -6.0335295013394055e-17,
        0.0,
        -3.1001731023818704e-18,
        0.0,
        1.4656810375760225e-19,
        0.0,
        7.9613613865392729e-21,
        0.0,
        -1.8883447938713474e-22,
        0.0,
        -1.2905747417458113e-23,
        0.0,
        1.2019134795549857e-25,
    ],
    [
        6.9811579282244814e-8,
        0.0,
        5.187602099781909e-8,
        0.0,
        -1.5025689400416703e-7,
        0.0,
        5.3851754154291294e-8,
        0.0,
        -1.2009470947212667e-8,
        0.0,
        1.8441416112134065e-9,
        0.0,
        -6.0512859225818797e-11,
        0.0,
        -5.8913927644794141e-11,
        0.0,
        1.6515772641435117e-11,
        0.0,
        -1.6489918275452743e-12,
        0.0,
        -8.4500074092413968e-14,
        0.0,
        3.0235180177726554e-14,
        0.0,
        -6.1792011237745804e-16,
        0.0,
        -2.1506480207808527e-16,
        0.0,
        5.2360584169450741e-18,
        0.0,
        8.7029449907588986e-19,
        0.0,
        -1.2721127494561934e-20,
        0.0,
        -2.1508806771393663e-21,
        0.0,
        9.4427326175640684e-24,
        0.0,
        3.3869185157923338e-24,
        0.0,
        1.2242358659889074e-26,
        0.0,
        -3.5475860657436262e-27,
    ],
    [
        0.0,
        -7.2052668862480094e-7,
        0.0,
        9.5246519676932996e-8,
        0.0,
        -6.8607103336143256e-9,
        0.0,
        1.0861860772157169e-9,
        0.0,
        -5.6476545546459395e-10,
        0.0,
        3.0303135722072827e-10,
        0.0,
        -1.0161023511502398e-10,
        0.0,
        2.1218695339457989e-11,
        0.0,
        -2.3594065730305761e-12,
        0.0,
        -2.493561669940678e-14,
        0.0,
        4.4887251706587481e-14,
        0.0,
        -4.0938445650275965e-15,
        0.0,
        -2.1625611258928978e-16,
        0.0,
        4.0485581090867896e-17,
        0.0,
        5.7971922978633614e-19,
        0.0,
        -1.8195439374647997e-19,
        0.0,
        -1.9137695557711522e-21,
        0.0,
        4.6542411725676074e-22,
        0.0,
        6.2386222346021944e-24,
        0.0,
        -7.3901610399368521e-25,
        0.0,
        -1.313121910620007e-26,
    ],
    [
        -2.9740973523705757e-8,
        0.0,
        6.0680009269451871e-8,
        0.0,
        -4.2394988325987057e-8,
        0.0,
        1.3933135998978081e-8,
        0.0,
        -3.1956663706788799e-9,
        0.0,
        7.1444898949269919e-10,
        0.0,
        -1.4990392420225012e-10,
        0.0,
        2.5219624397008122e-11,
        0.0,
        -2.6213301414208379e-12,
        0.0,
        -3.0049173260549824e-14,
        0.0,
        6.173168415377237e-14,
        0.0,
        -8.704823846615089e-15,
        0.0,
        1.2067339431155849e-16,
        0.0,
        8.3396902714535242e-17,
        0.0,
        -4.9379180531416651e-18,
        0.0,
        -3.9123048518036115e-19,
        0.0,
        2.8375008076217569e-20,
        0.0,
        1.2765507570920798e-21,
        0.0,
        -7.9376106231053341e-23,
        0.0,
        -3.0463094225466464e-24,
        0.0,
        1.293780885017518e-25,
        0.0,
        5.131523485966558e-27,
    ],
]
