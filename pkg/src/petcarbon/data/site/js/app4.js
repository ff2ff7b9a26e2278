// bundle
var v0 = 877143465;
var v1 = 169219985;
var v2 = 621261884;
var v3 = 795341628;
var v4 = 848020356;
var v5 = 827359922;
var v6 = 545727029;
var v7 = 1059171136;
var v8 = 130198402;
var v9 = 154984783;
var v10 = 830515528;
var v11 = 547580897;
var v12 = 952720167;
var v13 = 849997919;
var v14 = 774829668;
var v15 = 589254190;
var v16 = 54076888;
var v17 = 216575247;
var v18 = 27950949;
var v19 = 551936341;
var v20 = 1056458818;
var v21 = 406745642;
var v22 = 863817633;
var v23 = 445451686;
var v24 = 897864307;
var v25 = 363835541;
var v26 = 275773537;
var v27 = 281704998;
var v28 = 366374341;
var v29 = 452906811;
var v30 = 274447046;
var v31 = 536448090;
var v32 = 581072373;
var v33 = 725136585;
var v34 = 607120484;
var v35 = 211151947;
var v36 = 113906632;
var v37 = 799327222;
var v38 = 909219969;
var v39 = 728757779;
var v40 = 923075445;
var v41 = 945572593;
var v42 = 968965256;
var v43 = 359609988;
var v44 = 633904756;
var v45 = 391717450;
var v46 = 502376899;
var v47 = 287551190;
var v48 = 436030729;
var v49 = 1054795156;
var v50 = 190735134;
var v51 = 494080339;
var v52 = 998092521;
var v53 = 802071513;
var v54 = 477937221;
var v55 = 901321611;
var v56 = 924184806;
var v57 = 185703862;
var v58 = 535376526;
var v59 = 103455079;
var v60 = 965607954;
var v61 = 909393879;
var v62 = 711619638;
var v63 = 27975589;
var v64 = 789747674;
var v65 = 106039064;
var v66 = 1026401836;
var v67 = 157022739;
var v68 = 140114662;
var v69 = 681992381;
var v70 = 104716371;
var v71 = 684477617;
var v72 = 1015311299;
var v73 = 486735434;
var v74 = 843568009;
var v75 = 553035950;
var v76 = 113143877;
var v77 = 1038500081;
