#!/usr/bin/env python3
"""Regenerate the vendored stub template inventory.

The bundled templates are structural stand-ins for the regulator-approved
contract forms, which cannot be redistributed: same four parts, same
placeholder usage, same page structure, but original filler wording. Rerun
this script after editing the clause pools below; pass --filler to repeat
clause paragraphs and fatten every template (useful to approximate real
contract lengths in experiments).

    python scripts/build_stub_templates.py --out src/riscgen/data/templates
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

PAGE = "\f"

# Parallel filler clauses (en, fr). Index arithmetic below rotates through
# the pool so each template body differs while vocabulary stays contract-like.
CLAUSES = [
    (
        "The insurer agrees to indemnify the named insured for direct and accidental loss or "
        "damage described in this contract. The indemnity applies where the loss arises from "
        "the ownership, the use or the operation of the described vehicle within Canada or "
        "the United States.",
        "L'assureur s'engage à indemniser l'assuré désigné pour les pertes ou les dommages "
        "directs et accidentels décrits au présent contrat. L'indemnité s'applique lorsque le "
        "sinistre découle de la propriété, de l'usage ou de la conduite du véhicule désigné "
        "au Canada ou aux États-Unis.",
    ),
    (
        "Where the insured fails to comply with a condition of this contract, any claim arising "
        "during the period of non-compliance may be reduced or denied. The reduction applies "
        "to the extent permitted by the applicable legislation and by the general conditions "
        "stated in this form.",
        "Lorsque l'assuré omet de se conformer à une condition du présent contrat, toute "
        "réclamation survenant pendant la période de non-conformité peut être réduite ou "
        "refusée. La réduction s'applique dans la mesure permise par la législation applicable "
        "et par les conditions générales énoncées au présent formulaire.",
    ),
    (
        "The insured shall promptly notify the insurer of any material change in the risk, "
        "including a change of principal driver, a change in the use of the vehicle, or a "
        "modification that increases the likelihood or the severity of a loss.",
        "L'assuré doit aviser sans délai l'assureur de tout changement important du risque, "
        "notamment un changement de conducteur principal, un changement dans l'usage du véhicule "
        "ou une modification qui augmente la probabilité ou la gravité d'un sinistre.",
    ),
    (
        "No action shall be brought against the insurer before the expiry of the period during "
        "which the loss must be reported, and every action must be commenced within the time "
        "limit established by the legislation that governs this contract.",
        "Aucune action ne peut être intentée contre l'assureur avant l'expiration du délai prévu "
        "pour la déclaration du sinistre, et toute action doit être introduite dans le délai "
        "établi par la législation qui régit le présent contrat.",
    ),
    (
        "The amounts payable under this contract are expressed in Canadian currency, and any "
        "reference to a limit, a deductible or a premium must be read as a reference to the "
        "corresponding amount shown in the declarations.",
        "Les montants payables en vertu du présent contrat sont exprimés en monnaie canadienne, "
        "et toute mention d'un montant de garantie, d'une franchise ou d'une prime s'entend du "
        "montant correspondant indiqué aux conditions particulières.",
    ),
    (
        "In the event of disagreement about the nature, the extent or the value of the loss, the "
        "disagreement is submitted to the dispute resolution process described in the general "
        "conditions before any other remedy is exercised.",
        "En cas de désaccord sur la nature, l'étendue ou la valeur du sinistre, le désaccord est "
        "soumis au processus de règlement des différends décrit dans les conditions générales "
        "avant l'exercice de tout autre recours.",
    ),
    (
        "The insured must take all reasonable measures to protect the vehicle from further loss "
        "or damage after an accident, and the reasonable expenses incurred for that protection "
        "form part of the claim.",
        "L'assuré doit prendre toutes les mesures raisonnables pour protéger le véhicule contre "
        "toute perte ou tout dommage supplémentaire après un accident, et les dépenses "
        "raisonnables engagées pour cette protection font partie de la réclamation.",
    ),
    (
        "This contract does not cover loss or damage that occurs while the vehicle is rented or "
        "leased to another person. Nor does it cover a vehicle used to carry paying passengers "
        "or entered in a race or a speed test, unless an attached endorsement states otherwise.",
        "Le présent contrat ne couvre pas les pertes ou les dommages qui surviennent pendant que "
        "le véhicule est loué à une autre personne. Il ne couvre pas non plus le véhicule qui "
        "sert au transport de passagers moyennant rémunération ou qui participe à une course, "
        "sauf stipulation contraire d'un avenant joint.",
    ),
    (
        "Any endorsement attached to this contract modifies the base form only to the extent "
        "stated in that endorsement, and every provision of the base form that is not expressly "
        "modified continues to apply without change.",
        "Tout avenant joint au présent contrat ne modifie le formulaire de base que dans la "
        "mesure qui y est énoncée, et toute disposition du formulaire de base qui n'est pas "
        "expressément modifiée continue de s'appliquer sans changement.",
    ),
    (
        "The insurer may examine the damaged vehicle at any reasonable time, may require the "
        "insured to produce supporting documents, and may reproduce those documents for the "
        "purpose of adjusting the claim.",
        "L'assureur peut examiner le véhicule endommagé à tout moment raisonnable, peut exiger "
        "de l'assuré la production de pièces justificatives et peut reproduire ces pièces aux "
        "fins du règlement de la réclamation.",
    ),
    (
        "Where more than one coverage applies to the same loss, the indemnity is computed under "
        "each applicable coverage in the order shown in the declarations. The total indemnity "
        "never exceeds the actual amount of the loss.",
        "Lorsque plusieurs garanties s'appliquent au même sinistre, l'indemnité est calculée en "
        "vertu de chaque garantie applicable dans l'ordre indiqué aux conditions particulières. "
        "L'indemnité totale ne dépasse jamais le montant réel du sinistre.",
    ),
    (
        "The premium for each coverage has been computed according to the information declared "
        "by the insured. Any misrepresentation or concealment of that information may entail "
        "the reduction of the indemnity or the nullity of the contract.",
        "La prime de chaque garantie a été calculée d'après les renseignements déclarés par "
        "l'assuré. Toute fausse déclaration ou réticence portant sur ces renseignements peut "
        "entraîner la réduction de l'indemnité ou la nullité du contrat.",
    ),
    (
        "Depreciation is deducted from the indemnity according to the age, the mileage and the "
        "condition of the vehicle or of the damaged part, except where an attached endorsement "
        "provides for settlement without depreciation.",
        "La dépréciation est déduite de l'indemnité selon l'âge, le kilométrage et l'état du "
        "véhicule ou de la pièce endommagée, sauf lorsqu'un avenant joint prévoit un règlement "
        "sans dépréciation.",
    ),
    (
        "The insurer may repair or replace the damaged property with property of like kind and "
        "quality instead of paying the indemnity in money, after giving the insured written "
        "notice of that intention within a reasonable time.",
        "L'assureur peut réparer ou remplacer les biens endommagés par des biens de nature et de "
        "qualité semblables au lieu de verser l'indemnité en argent, après avoir donné à "
        "l'assuré un avis écrit de cette intention dans un délai raisonnable.",
    ),
    (
        "Every notice intended for the insured may be delivered personally or sent by mail to "
        "the most recent address appearing in the insurer's records. Every notice intended "
        "for the insurer may be delivered to one of its offices.",
        "Tout avis destiné à l'assuré peut être remis en mains propres ou expédié par la poste à "
        "la dernière adresse figurant aux dossiers de l'assureur. Tout avis destiné à "
        "l'assureur peut être remis à l'un de ses établissements.",
    ),
    (
        "The coverage provided by this section applies only to the vehicle described in the "
        "declarations, to a newly acquired vehicle declared within the prescribed time, and to a "
        "temporary replacement vehicle used while the described vehicle is out of service.",
        "La garantie prévue au présent chapitre s'applique uniquement au véhicule décrit aux "
        "conditions particulières, à un véhicule nouvellement acquis déclaré dans le délai "
        "prescrit et à un véhicule de remplacement temporaire utilisé pendant que le véhicule "
        "décrit est hors d'usage.",
    ),
    (
        "Where the contract is cancelled by the insured, the insurer retains the earned premium "
        "computed according to the cancellation table in force. Where the contract is "
        "cancelled by the insurer, the earned premium is computed proportionally to the "
        "elapsed time.",
        "Lorsque le contrat est résilié par l'assuré, l'assureur conserve la prime acquise "
        "calculée selon la table de résiliation en vigueur. Lorsque le contrat est résilié "
        "par l'assureur, la prime acquise est calculée au prorata du temps écoulé.",
    ),
    (
        "The obligations of the insurer under this contract are limited to the amounts, the "
        "deductibles and the conditions stated in the declarations, and nothing in this document "
        "extends those obligations beyond what the legislation requires.",
        "Les obligations de l'assureur en vertu du présent contrat se limitent aux montants, aux "
        "franchises et aux conditions indiqués aux conditions particulières, et rien dans le "
        "présent document n'étend ces obligations au-delà de ce que la législation exige.",
    ),
]

ENDORSEMENTS = [
    ("2", "Designated drivers", "Conducteurs désignés",
     "This endorsement restricts or extends coverage according to the drivers designated below, "
     "and the premium shown in the declarations reflects that designation.",
     "Le présent avenant restreint ou étend la garantie selon les conducteurs désignés "
     "ci-dessous, et la prime indiquée aux conditions particulières tient compte de cette "
     "désignation."),
    ("3", "Damage to non-owned vehicles", "Dommages aux véhicules non possédés",
     "This endorsement extends the property damage coverage to an automobile that the insured "
     "does not own, subject to the limits stated in the declarations.",
     "Le présent avenant étend la garantie des dommages matériels à une automobile dont "
     "l'assuré n'est pas propriétaire, sous réserve des montants indiqués aux conditions "
     "particulières."),
    ("5a", "Leased vehicles", "Véhicules loués à long terme",
     "This endorsement adapts the contract to a vehicle leased under a long term agreement and "
     "protects the interest of the lessor named in the declarations.",
     "Le présent avenant adapte le contrat à un véhicule loué en vertu d'une entente à long "
     "terme et protège l'intérêt du locateur désigné aux conditions particulières."),
    ("8", "Accident rating protection", "Protection du dossier de conduite",
     "This endorsement provides that the first chargeable accident of the contract period does "
     "not affect the premium computed at renewal.",
     "Le présent avenant prévoit que le premier accident imputable de la période du contrat "
     "n'influe pas sur la prime calculée au renouvellement."),
    ("13c", "Glass coverage limitation", "Limitation de la garantie des vitres",
     "This endorsement excludes damage limited to the glass of the vehicle unless the damage "
     "occurs together with other covered damage.",
     "Le présent avenant exclut les dommages limités aux vitres du véhicule, à moins que ces "
     "dommages ne surviennent en même temps que d'autres dommages couverts."),
    ("16", "Suspension of coverage", "Suspension des garanties",
     "This endorsement suspends the coverages designated below while the vehicle is withdrawn "
     "from circulation, and the suspended coverages resume only upon written notice.",
     "Le présent avenant suspend les garanties désignées ci-dessous pendant que le véhicule est "
     "retiré de la circulation, et les garanties suspendues ne reprennent effet que sur avis "
     "écrit."),
    ("19", "Limitation of amounts", "Limitation des montants",
     "This endorsement fixes the maximum amount payable for the vehicle or for the equipment "
     "designated below, notwithstanding any higher value declared elsewhere.",
     "Le présent avenant fixe le montant maximal payable pour le véhicule ou pour l'équipement "
     "désigné ci-dessous, nonobstant toute valeur supérieure déclarée ailleurs."),
    ("20a", "Travel costs", "Frais de déplacement",
     "This endorsement reimburses reasonable travel costs incurred while the vehicle cannot be "
     "used because of a loss covered under the contract.",
     "Le présent avenant rembourse les frais de déplacement raisonnables engagés pendant que le "
     "véhicule ne peut être utilisé en raison d'un sinistre couvert par le contrat."),
    ("21b", "Occasional use of other vehicles", "Usage occasionnel d'autres véhicules",
     "This endorsement extends the designated coverages to the occasional use of an automobile "
     "that is not owned by the insured or by a member of the insured's household.",
     "Le présent avenant étend les garanties désignées à l'usage occasionnel d'une automobile "
     "qui n'appartient ni à l'assuré ni à un membre de sa maisonnée."),
    ("23a", "Lienholder protection", "Protection du créancier",
     "This endorsement protects the interest of the lienholder named in the declarations and "
     "provides that indemnities are payable jointly to the insured and to that lienholder.",
     "Le présent avenant protège l'intérêt du créancier désigné aux conditions particulières et "
     "prévoit que les indemnités sont payables conjointement à l'assuré et à ce créancier."),
    ("25", "Alteration of the contract", "Modification du contrat",
     "This endorsement records an alteration agreed between the parties, and the remainder of "
     "the contract continues to apply as written.",
     "Le présent avenant constate une modification convenue entre les parties, et le reste du "
     "contrat continue de s'appliquer tel qu'il est rédigé."),
    ("27", "Liability for damage to non-owned vehicles", "Responsabilité pour dommages aux véhicules d'autrui",
     "This endorsement covers the civil liability of the insured for damage to an automobile "
     "rented or borrowed for a short period, including during a trip outside the province.",
     "Le présent avenant couvre la responsabilité civile de l'assuré pour les dommages causés à "
     "une automobile louée ou empruntée pour une courte période, notamment lors d'un voyage à "
     "l'extérieur de la province."),
    ("28", "Reduced coverage for named drivers", "Garanties réduites pour conducteurs nommés",
     "This endorsement reduces the designated coverages while the vehicle is driven by the "
     "person named below, and the premium reflects that reduction.",
     "Le présent avenant réduit les garanties désignées pendant que le véhicule est conduit par "
     "la personne nommée ci-dessous, et la prime tient compte de cette réduction."),
    ("31", "Non-owned trailers", "Remorques non possédées",
     "This endorsement extends the designated coverages to a trailer that the insured does not "
     "own while it is attached to the described vehicle.",
     "Le présent avenant étend les garanties désignées à une remorque dont l'assuré n'est pas "
     "propriétaire pendant qu'elle est attelée au véhicule décrit."),
    ("33", "Personal effects", "Effets personnels",
     "This endorsement covers the personal effects of the insured carried in the vehicle "
     "against the perils designated below, subject to the stated amount.",
     "Le présent avenant couvre les effets personnels de l'assuré transportés dans le véhicule "
     "contre les risques désignés ci-dessous, sous réserve du montant indiqué."),
    ("34", "Accident benefits", "Indemnités d'accident",
     "This endorsement provides the accident benefits described below to the insured and to any "
     "passenger of the vehicle, regardless of fault.",
     "Le présent avenant accorde les indemnités d'accident décrites ci-dessous à l'assuré et à "
     "tout passager du véhicule, sans égard à la responsabilité."),
    ("37", "Additional equipment", "Équipement additionnel",
     "This endorsement covers the additional equipment described below that is permanently "
     "attached to the vehicle, up to the amount stated in the declarations.",
     "Le présent avenant couvre l'équipement additionnel décrit ci-dessous qui est fixé en "
     "permanence au véhicule, jusqu'à concurrence du montant indiqué aux conditions "
     "particulières."),
    ("38", "Increased benefits schedule", "Barème d'indemnités majoré",
     "This endorsement increases the benefits payable under the schedule designated below and "
     "applies only while the contract remains in force.",
     "Le présent avenant majore les indemnités payables selon le barème désigné ci-dessous et "
     "ne s'applique que pendant que le contrat demeure en vigueur."),
    ("40", "Incidental use for remuneration", "Usage accessoire contre rémunération",
     "This endorsement permits the incidental use of the vehicle for remuneration described "
     "below without prejudice to the coverages of the contract.",
     "Le présent avenant permet l'usage accessoire du véhicule contre rémunération décrit "
     "ci-dessous sans porter atteinte aux garanties du contrat."),
    ("41", "Removal of deductible", "Suppression de la franchise",
     "This endorsement removes the deductible applicable to the designated coverage for the "
     "perils described below, and the premium reflects that removal.",
     "Le présent avenant supprime la franchise applicable à la garantie désignée pour les "
     "risques décrits ci-dessous, et la prime tient compte de cette suppression."),
    ("43", "Replacement value", "Valeur de remplacement",
     "This endorsement provides that a covered loss to the vehicle is settled without deduction "
     "for depreciation, according to the settlement options described below.",
     "Le présent avenant prévoit qu'un sinistre couvert touchant le véhicule est réglé sans "
     "déduction pour dépréciation, selon les options de règlement décrites ci-dessous."),
    ("44", "Family protection", "Protection de la famille",
     "This endorsement extends the liability coverage for the benefit of the insured and of the "
     "members of the insured's family injured by an underinsured motorist.",
     "Le présent avenant étend la garantie de responsabilité au profit de l'assuré et des "
     "membres de sa famille blessés par un automobiliste insuffisamment assuré."),
    ("45", "Extended loss of use", "Privation de jouissance étendue",
     "This endorsement extends the reimbursement period for the loss of use of the vehicle "
     "following a covered loss, up to the daily and total amounts stated below.",
     "Le présent avenant prolonge la période de remboursement pour la privation de jouissance "
     "du véhicule à la suite d'un sinistre couvert, jusqu'aux montants quotidien et total "
     "indiqués ci-dessous."),
    ("47", "Modified vehicles", "Véhicules modifiés",
     "This endorsement adapts the coverages to the modifications of the vehicle described "
     "below and fixes the insured value of those modifications.",
     "Le présent avenant adapte les garanties aux modifications du véhicule décrites ci-dessous "
     "et fixe la valeur assurée de ces modifications."),
    ("48", "Additional insured", "Assuré additionnel",
     "This endorsement designates the additional insured named below, whose insurable interest "
     "in the vehicle is protected to the extent stated in the declarations.",
     "Le présent avenant désigne l'assuré additionnel nommé ci-dessous, dont l'intérêt "
     "assurable dans le véhicule est protégé dans la mesure indiquée aux conditions "
     "particulières."),
    ("48a", "Additional insured and loss payee", "Assuré additionnel et bénéficiaire",
     "This endorsement designates the additional insured and loss payee named below and directs "
     "the insurer to pay indemnities according to their respective interests.",
     "Le présent avenant désigne l'assuré additionnel et le bénéficiaire nommés ci-dessous et "
     "ordonne à l'assureur de verser les indemnités selon leurs intérêts respectifs."),
]

INSURER = ("Boreal Insurance Inc.", "Assurance Boréale inc.")


def clause(index: int, lang: int) -> str:
    return CLAUSES[index % len(CLAUSES)][lang]


def clauses(start: int, count: int, lang: int, filler: int) -> str:
    out = []
    for rep in range(filler):
        for k in range(count):
            out.append(clause(start + k + rep * 5, lang))
    return "\n\n".join(out)


def base_templates(lang: int, filler: int) -> list[dict]:
    """The 29 introductory, declaration and base-form templates."""
    en = lang == 0
    insurer = INSURER[lang]
    t = []

    t.append({
        "id": "intro-cover", "part": "introductory", "file": "intro_01_cover.txt",
        "body": (
            (f"{insurer}\nAUTOMOBILE INSURANCE CONTRACT\n\n"
             "Named insured: <Insured Full Name>\n"
             "Address: <Insured Civic Address>\n"
             "Client number: <Insured Client Id>\n\n"
             "This document constitutes your automobile insurance contract. Please read it "
             "carefully and keep it in a safe place with your other important papers.\n")
            if en else
            (f"{insurer}\nCONTRAT D'ASSURANCE AUTOMOBILE\n\n"
             "Assuré désigné : <Insured Full Name>\n"
             "Adresse : <Insured Civic Address>\n"
             "Numéro de client : <Insured Client Id>\n\n"
             "Le présent document constitue votre contrat d'assurance automobile. Veuillez le "
             "lire attentivement et le conserver en lieu sûr avec vos autres documents "
             "importants.\n")
        ),
    })
    t.append({
        "id": "intro-service", "part": "introductory", "file": "intro_02_service.txt",
        "body": (
            ("CUSTOMER SERVICE\n\n"
             "Our advisors can answer your questions about your contract, your coverages and "
             "your premium from Monday to Friday during regular business hours. You can also "
             "report a claim at any time, every day of the year, through our telephone claims "
             "service.\n\n" + clauses(14, 1, lang, filler) + "\n")
            if en else
            ("SERVICE À LA CLIENTÈLE\n\n"
             "Nos conseillers peuvent répondre à vos questions sur votre contrat, vos garanties "
             "et votre prime du lundi au vendredi pendant les heures normales de bureau. Vous "
             "pouvez également déclarer un sinistre en tout temps, tous les jours de l'année, "
             "grâce à notre service téléphonique de réclamations.\n\n"
             + clauses(14, 1, lang, filler) + "\n")
        ),
    })
    t.append({
        "id": "intro-contents", "part": "introductory", "file": "intro_03_contents.txt",
        "body": (
            ("TABLE OF CONTENTS\n\n"
             "Your contract contains the following parts. The introductory pages present your "
             "insurer and the services available to you. The declarations describe the insured, "
             "the vehicle and the coverages purchased. The base insurance form states the "
             "general terms of the coverage. The attached endorsements modify the base form "
             "according to your choices.\n")
            if en else
            ("TABLE DES MATIÈRES\n\n"
             "Votre contrat contient les parties suivantes. Les pages d'introduction présentent "
             "votre assureur et les services offerts. Les conditions particulières décrivent "
             "l'assuré, le véhicule et les garanties souscrites. Le formulaire de base énonce "
             "les modalités générales de la garantie. Les avenants joints modifient le "
             "formulaire de base selon vos choix.\n")
        ),
    })
    t.append({
        "id": "intro-advantages", "part": "introductory", "file": "intro_04_advantages.txt",
        "body": (
            ("YOUR CLIENT ADVANTAGES\n\n"
             "As a client, you benefit from privileged rates, from accident forgiveness options "
             "and from a renewal process that keeps your file up to date without unnecessary "
             "steps.\n\n"
             "Association rebate applied to this contract: <Association Rebate>\n\n"
             + clauses(11, 1, lang, filler) + "\n")
            if en else
            ("VOS AVANTAGES CLIENT\n\n"
             "À titre de client, vous bénéficiez de tarifs privilégiés, d'options de pardon "
             "d'accident et d'un processus de renouvellement qui maintient votre dossier à jour "
             "sans démarches inutiles.\n\n"
             "Rabais d'association appliqué au présent contrat : <Association Rebate>\n\n"
             + clauses(11, 1, lang, filler) + "\n")
        ),
    })
    t.append({
        "id": "intro-actions", "part": "introductory", "file": "intro_05_actions.txt",
        "body": (
            ("ACTIONS REQUIRED\n\n"
             "Detach and keep your insurance certificate in the vehicle at all times. Verify "
             "every statement appearing in the declarations and notify us of any error before "
             "the contract takes effect on <Contract Start Date>.\n\n"
             + clauses(2, 1, lang, filler) + "\n")
            if en else
            ("MESURES À PRENDRE\n\n"
             "Détachez votre certificat d'assurance et conservez-le dans le véhicule en tout "
             "temps. Vérifiez chaque déclaration figurant aux conditions particulières et "
             "signalez-nous toute erreur avant la prise d'effet du contrat le "
             "<Contract Start Date>.\n\n" + clauses(2, 1, lang, filler) + "\n")
        ),
    })

    t.append({
        "id": "decl-insured", "part": "declaration", "file": "decl_01_insured.txt",
        "body": (
            ("DECLARATIONS\n\n"
             "Item 1. NAMED INSURED\n"
             "Name: <Insured Full Name>\n"
             "Address: <Insured Civic Address>\n"
             "Date of birth: <Insured Date Of Birth>\n"
             "Sex: <Insured Sex>\n"
             "Client number: <Insured Client Id>\n\n"
             "Item 2. CONTRACT PERIOD\n"
             "From <Contract Start Date> to <Contract End Date>, both at one minute past "
             "midnight, standard time, at the address of the named insured.\n\n"
             "Item 3. DRIVING RECORD\n"
             "Claims in the past five years: <Driver Claims Count>\n"
             "Licence suspensions: <Driver Suspensions Count>\n")
            if en else
            ("CONDITIONS PARTICULIÈRES\n\n"
             "Article 1. ASSURÉ DÉSIGNÉ\n"
             "Nom : <Insured Full Name>\n"
             "Adresse : <Insured Civic Address>\n"
             "Date de naissance : <Insured Date Of Birth>\n"
             "Sexe : <Insured Sex>\n"
             "Numéro de client : <Insured Client Id>\n\n"
             "Article 2. PÉRIODE DU CONTRAT\n"
             "Du <Contract Start Date> au <Contract End Date>, dans les deux cas à une minute "
             "après minuit, heure normale, à l'adresse de l'assuré désigné.\n\n"
             "Article 3. DOSSIER DE CONDUITE\n"
             "Réclamations au cours des cinq dernières années : <Driver Claims Count>\n"
             "Suspensions de permis : <Driver Suspensions Count>\n")
        ),
    })
    t.append({
        "id": "decl-vehicle", "part": "declaration", "file": "decl_02_vehicle.txt",
        "body": (
            ("Item 4. DESCRIBED VEHICLE\n"
             "Vehicle: <Vehicle Year> <Vehicle Maker> <Vehicle Model>\n"
             "Motor type: <Vehicle Motor Type>\n"
             "Purchase condition: <Vehicle Purchase Condition>\n"
             "Financing institution: <Vehicle Financing Institution>\n\n"
             "The insured declares that the vehicle described above is used mainly for pleasure "
             "and for travel between the residence and the place of work, and that no other use "
             "has been declared to the insurer.\n")
            if en else
            ("Article 4. VÉHICULE DÉSIGNÉ\n"
             "Véhicule : <Vehicle Year> <Vehicle Maker> <Vehicle Model>\n"
             "Type de moteur : <Vehicle Motor Type>\n"
             "État à l'achat : <Vehicle Purchase Condition>\n"
             "Institution de financement : <Vehicle Financing Institution>\n\n"
             "L'assuré déclare que le véhicule décrit ci-dessus sert principalement à des fins "
             "de loisir et aux déplacements entre la résidence et le lieu de travail, et "
             "qu'aucun autre usage n'a été déclaré à l'assureur.\n")
        ),
    })
    t.append({
        "id": "decl-coverages", "part": "declaration", "file": "decl_03_coverages.txt",
        "body": (
            ("Item 5. COVERAGES AND PREMIUMS\n"
             "Civil liability limit: <Liability Limit>\n\n"
             "<Coverage Summary Table>\n"
             "TOTAL PREMIUM: <Total Premium>\n"
             "Association rebate: <Association Rebate>\n\n"
             "Only the coverages listed above apply to this contract. Each premium shown "
             "includes the applicable adjustments declared at issue.\n")
            if en else
            ("Article 5. GARANTIES ET PRIMES\n"
             "Montant de la responsabilité civile : <Liability Limit>\n\n"
             "<Coverage Summary Table>\n"
             "PRIME TOTALE : <Total Premium>\n"
             "Rabais d'association : <Association Rebate>\n\n"
             "Seules les garanties énumérées ci-dessus s'appliquent au présent contrat. Chaque "
             "prime indiquée comprend les ajustements applicables déclarés à l'émission.\n")
        ),
    })

    qpf_specs = [
        ("qpf-definitions", "qpf_01_definitions.txt",
         ("DEFINITIONS", "DÉFINITIONS"),
         ("In this form, the word vehicle designates the automobile described in the "
          "declarations, the word insured designates the named insured and any person whose "
          "liability is covered, and the word loss designates direct and accidental loss or "
          "damage.",
          "Dans le présent formulaire, le mot véhicule désigne l'automobile décrite aux "
          "conditions particulières, le mot assuré désigne l'assuré désigné et toute personne "
          "dont la responsabilité est couverte, et le mot sinistre désigne les pertes ou les "
          "dommages directs et accidentels."),
         (0, 2), 2),
        ("qpf-section-a-agreement", "qpf_02_section_a_agreement.txt",
         ("SECTION A - CIVIL LIABILITY - INSURING AGREEMENT",
          "CHAPITRE A - RESPONSABILITÉ CIVILE - OBJET DE LA GARANTIE"),
         ("Section A covers the civil liability of the insured for bodily injury or property "
          "damage caused to another person by the ownership, the use or the operation of the "
          "vehicle.",
          "Le chapitre A couvre la responsabilité civile de l'assuré pour les blessures "
          "corporelles ou les dommages matériels causés à autrui par la propriété, l'usage ou "
          "la conduite du véhicule."),
         (2, 2), 1),
        ("qpf-section-a-exclusions", "qpf_03_section_a_exclusions.txt",
         ("SECTION A - EXCLUSIONS", "CHAPITRE A - EXCLUSIONS"),
         ("Section A does not cover liability assumed by contract, damage to property owned by "
          "the insured or transported in the vehicle, or injury sustained by a person while "
          "repairing or servicing the vehicle in the course of a business.",
          "Le chapitre A ne couvre pas la responsabilité assumée par contrat, les dommages aux "
          "biens appartenant à l'assuré ou transportés dans le véhicule, ni les blessures "
          "subies par une personne pendant la réparation ou l'entretien du véhicule dans le "
          "cadre d'une entreprise."),
         (7, 2), 1),
        ("qpf-section-a-limit", "qpf_04_section_a_limit.txt",
         ("SECTION A - LIMIT OF LIABILITY", "CHAPITRE A - MONTANT DE LA GARANTIE"),
         ("The limit of liability stated in the declarations for this contract is "
          "<Liability Limit>, and that amount applies to each loss regardless of the number of "
          "persons injured or of claims presented.",
          "Le montant de garantie indiqué aux conditions particulières du présent contrat est "
          "de <Liability Limit>, et ce montant s'applique à chaque sinistre sans égard au "
          "nombre de personnes blessées ou de réclamations présentées."),
         (10, 2), 1),
        ("qpf-section-b-general", "qpf_05_section_b_general.txt",
         ("SECTION B - DAMAGE TO INSURED VEHICLE - GENERAL",
          "CHAPITRE B - DOMMAGES AU VÉHICULE ASSURÉ - DISPOSITIONS GÉNÉRALES"),
         ("Section B covers direct and accidental damage to the vehicle according to the "
          "divisions purchased, and each division applies only if a premium is shown for it in "
          "the declarations.",
          "Le chapitre B couvre les dommages directs et accidentels au véhicule selon les "
          "protections souscrites, et chaque protection ne s'applique que si une prime est "
          "indiquée à son égard aux conditions particulières."),
         (12, 2), 1),
        ("qpf-section-b1", "qpf_06_section_b1.txt",
         ("SECTION B - DIVISION 1 - ALL PERILS", "CHAPITRE B - PROTECTION 1 - TOUS RISQUES"),
         ("Division 1 covers all perils of loss or damage to the vehicle, subject to the "
          "exclusions of this form and to the deductible shown in the declarations.",
          "La protection 1 couvre tous les risques de perte ou de dommage au véhicule, sous "
          "réserve des exclusions du présent formulaire et de la franchise indiquée aux "
          "conditions particulières."),
         (15, 1), 1),
        ("qpf-section-b2", "qpf_07_section_b2.txt",
         ("SECTION B - DIVISION 2 - COLLISION AND UPSET",
          "CHAPITRE B - PROTECTION 2 - COLLISION ET VERSEMENT"),
         ("Division 2 covers loss or damage caused by the collision of the vehicle with another "
          "object or by its upset, subject to the deductible shown in the declarations.",
          "La protection 2 couvre les pertes ou les dommages causés par la collision du "
          "véhicule avec un autre objet ou par son versement, sous réserve de la franchise "
          "indiquée aux conditions particulières."),
         (16, 1), 1),
        ("qpf-section-b3", "qpf_08_section_b3.txt",
         ("SECTION B - DIVISION 3 - ALL PERILS OTHER THAN COLLISION",
          "CHAPITRE B - PROTECTION 3 - TOUS RISQUES SAUF COLLISION"),
         ("Division 3 covers loss or damage caused by perils other than collision or upset, "
          "including fire, theft, hail, windstorm and breakage of glass, subject to the "
          "deductible shown in the declarations.",
          "La protection 3 couvre les pertes ou les dommages causés par des risques autres que "
          "la collision ou le versement, notamment l'incendie, le vol, la grêle, la tempête de "
          "vent et le bris des vitres, sous réserve de la franchise indiquée aux conditions "
          "particulières."),
         (17, 1), 1),
        ("qpf-section-b4", "qpf_09_section_b4.txt",
         ("SECTION B - DIVISION 4 - SPECIFIED PERILS",
          "CHAPITRE B - PROTECTION 4 - RISQUES SPÉCIFIÉS"),
         ("Division 4 covers loss or damage caused only by the perils specifically named in "
          "this form, namely fire, lightning, theft, windstorm, hail, earthquake, explosion and "
          "the stranding or sinking of a conveyance transporting the vehicle.",
          "La protection 4 couvre les pertes ou les dommages causés uniquement par les risques "
          "expressément nommés au présent formulaire, à savoir l'incendie, la foudre, le vol, "
          "la tempête de vent, la grêle, le tremblement de terre, l'explosion ainsi que "
          "l'échouement ou le naufrage d'un moyen de transport du véhicule."),
         (1, 1), 1),
        ("qpf-deductibles", "qpf_10_deductibles.txt",
         ("DEDUCTIBLES", "FRANCHISES"),
         ("The deductible shown in the declarations for a division of Section B is subtracted "
          "from each indemnity payable under that division, and a single deductible applies to "
          "each separate loss.",
          "La franchise indiquée aux conditions particulières pour une protection du chapitre B "
          "est soustraite de chaque indemnité payable en vertu de cette protection, et une "
          "seule franchise s'applique à chaque sinistre distinct."),
         (4, 2), 1),
        ("qpf-exclusions-general", "qpf_11_exclusions_general.txt",
         ("GENERAL EXCLUSIONS", "EXCLUSIONS GÉNÉRALES"),
         ("This form does not cover wear and tear, mechanical breakdown, rust or corrosion, nor "
          "loss or damage that occurs while the vehicle is driven by a person who is not "
          "authorized by law to drive it.",
          "Le présent formulaire ne couvre pas l'usure normale, la défaillance mécanique, la "
          "rouille ou la corrosion, ni les pertes ou les dommages qui surviennent pendant que "
          "le véhicule est conduit par une personne qui n'est pas autorisée par la loi à le "
          "conduire."),
         (7, 3), 2),
        ("qpf-newly-acquired", "qpf_12_newly_acquired.txt",
         ("NEWLY ACQUIRED AND TEMPORARY VEHICLES",
          "VÉHICULES NOUVELLEMENT ACQUIS ET TEMPORAIRES"),
         ("The coverages of this contract extend to a newly acquired vehicle and to a temporary "
          "replacement vehicle under the conditions stated below.",
          "Les garanties du présent contrat s'étendent à un véhicule nouvellement acquis et à "
          "un véhicule de remplacement temporaire aux conditions énoncées ci-dessous."),
         (15, 2), 1),
        ("qpf-material-change", "qpf_13_material_change.txt",
         ("GENERAL CONDITIONS - MATERIAL CHANGE IN RISK",
          "CONDITIONS GÉNÉRALES - AGGRAVATION DU RISQUE"),
         ("", ""),
         (2, 3), 1),
        ("qpf-notice-claim", "qpf_14_notice_claim.txt",
         ("GENERAL CONDITIONS - NOTICE OF CLAIM",
          "CONDITIONS GÉNÉRALES - DÉCLARATION DE SINISTRE"),
         ("Upon a loss, the insured must give the insurer written notice describing the "
          "circumstances, the persons involved and the nature of the damage as soon as "
          "practicable after becoming aware of the loss.",
          "En cas de sinistre, l'assuré doit donner à l'assureur un avis écrit décrivant les "
          "circonstances, les personnes en cause et la nature des dommages dès qu'il en a "
          "connaissance."),
         (6, 2), 1),
        ("qpf-proof-loss", "qpf_15_proof_loss.txt",
         ("GENERAL CONDITIONS - PROOF OF LOSS", "CONDITIONS GÉNÉRALES - PREUVE DE SINISTRE"),
         ("The insured must deliver a sworn proof of loss on the form provided by the insurer, "
          "stating the origin and the circumstances of the loss, the interest of the insured "
          "and of any other person, and the value of the damaged property.",
          "L'assuré doit remettre une déclaration assermentée sur le formulaire fourni par "
          "l'assureur, indiquant l'origine et les circonstances du sinistre, l'intérêt de "
          "l'assuré et de toute autre personne, ainsi que la valeur des biens endommagés."),
         (9, 2), 1),
        ("qpf-examination", "qpf_16_examination.txt",
         ("GENERAL CONDITIONS - EXAMINATION", "CONDITIONS GÉNÉRALES - EXAMEN"),
         ("", ""),
         (9, 3), 1),
        ("qpf-settlement", "qpf_17_settlement.txt",
         ("GENERAL CONDITIONS - SETTLEMENT", "CONDITIONS GÉNÉRALES - RÈGLEMENT"),
         ("The indemnity is payable within sixty days after receipt of the proof of loss or, "
          "where applicable, within sixty days after the completion of the dispute resolution "
          "process.",
          "L'indemnité est payable dans les soixante jours suivant la réception de la preuve de "
          "sinistre ou, le cas échéant, dans les soixante jours suivant la fin du processus de "
          "règlement des différends."),
         (12, 2), 1),
        ("qpf-cancellation", "qpf_18_cancellation.txt",
         ("GENERAL CONDITIONS - CANCELLATION", "CONDITIONS GÉNÉRALES - RÉSILIATION"),
         ("Unless it is cancelled earlier in accordance with this condition, this contract "
          "expires on <Contract End Date> at one minute past midnight, standard time.",
          "À moins d'une résiliation antérieure conforme à la présente condition, le contrat "
          "expire le <Contract End Date> à une minute après minuit, heure normale."),
         (16, 2), 1),
        ("qpf-arbitration", "qpf_19_arbitration.txt",
         ("GENERAL CONDITIONS - DISPUTE RESOLUTION",
          "CONDITIONS GÉNÉRALES - RÈGLEMENT DES DIFFÉRENDS"),
         ("", ""),
         (5, 2), 1),
        ("qpf-currency-notices", "qpf_20_currency_notices.txt",
         ("CURRENCY AND NOTICES", "MONNAIE ET AVIS"),
         ("", ""),
         (4, 2), 1),
        ("qpf-statutory", "qpf_21_statutory.txt",
         ("PROVISIONS REQUIRED BY LAW", "DISPOSITIONS PRÉVUES PAR LA LOI"),
         ("The provisions of this form that restate requirements of the legislation apply as "
          "written in the legislation, and any provision of this contract less favourable to "
          "the insured is without effect.",
          "Les dispositions du présent formulaire qui reprennent des exigences de la "
          "législation s'appliquent telles qu'elles figurent dans la législation, et toute "
          "disposition du présent contrat moins favorable à l'assuré est sans effet."),
         (3, 3), 2),
    ]
    for tid, fname, titles, leads, (pool_start, pool_count), pages in qpf_specs:
        title = titles[lang]
        lead = leads[lang]
        paragraphs = []
        if lead:
            paragraphs.append(lead)
        per_page = max(1, (pool_count * filler + pages - 1) // pages)
        pool = clauses(pool_start, pool_count, lang, filler).split("\n\n")
        blocks: list[str] = []
        for p in range(pages):
            chunk = pool[p * per_page : (p + 1) * per_page]
            if p == 0:
                chunk = paragraphs + chunk
            blocks.append("\n\n".join(chunk))
        body = f"{title}\n\n" + PAGE.join(b + "\n" for b in blocks if b)
        t.append({"id": tid, "part": "qpf", "file": fname, "body": body})
    return t


def endorsement_templates(lang: int, filler: int) -> list[dict]:
    en = lang == 0
    t = []
    for i, (eid, title_en, title_fr, purpose_en, purpose_fr) in enumerate(ENDORSEMENTS):
        title = title_en if en else title_fr
        purpose = purpose_en if en else purpose_fr
        if en:
            header = f"ENDORSEMENT QEF {eid} - {title.upper()}"
            applies = (
                "This endorsement forms part of the contract to which it is attached and "
                "applies to the <Vehicle Year> <Vehicle Maker> <Vehicle Model> described in "
                "the declarations."
            )
            effect = (
                "This endorsement takes effect on <Contract Start Date> and expires with the "
                "contract unless it is withdrawn earlier in writing. All other conditions of "
                "the contract remain unchanged."
            )
        else:
            header = f"AVENANT FAQ {eid} - {title.upper()}"
            applies = (
                "Le présent avenant fait partie du contrat auquel il est joint et s'applique "
                "au véhicule <Vehicle Year> <Vehicle Maker> <Vehicle Model> décrit aux "
                "conditions particulières."
            )
            effect = (
                "Le présent avenant prend effet le <Contract Start Date> et expire avec le "
                "contrat, à moins d'un retrait antérieur constaté par écrit. Toutes les autres "
                "conditions du contrat demeurent inchangées."
            )
        body = (
            f"{header}\n\n{applies}\n\n{purpose}\n\n"
            + clauses(8 + i, 1 + filler // 2, lang, filler)
            + f"\n\n{effect}\n"
        )
        t.append({
            "id": f"qef-{eid}", "part": "endorsement", "file": f"qef_{eid}.txt",
            "endorsement_id": eid, "body": body,
        })
    return t


def build(out_dir: Path, filler: int) -> None:
    for lang, code in ((0, "en"), (1, "fr")):
        lang_dir = out_dir / code
        lang_dir.mkdir(parents=True, exist_ok=True)
        templates = base_templates(lang, filler) + endorsement_templates(lang, filler)
        manifest = {"templates": []}
        for spec in templates:
            (lang_dir / spec["file"]).write_text(spec["body"], encoding="utf-8")
            entry = {"id": spec["id"], "file": spec["file"], "part": spec["part"]}
            if "endorsement_id" in spec:
                entry["endorsement_id"] = spec["endorsement_id"]
            manifest["templates"].append(entry)
        (lang_dir / "manifest.json").write_text(
            json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
        base = sum(1 for s in templates if s["part"] != "endorsement")
        endo = len(templates) - base
        print(f"{code}: wrote {base} base templates and {endo} endorsement templates")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out", type=Path, default=Path("src/riscgen/data/templates"),
        help="output template directory (default: the vendored data directory)",
    )
    parser.add_argument(
        "--filler", type=int, default=1,
        help="filler multiplier; higher values repeat clauses to lengthen templates",
    )
    args = parser.parse_args()
    build(args.out, max(1, args.filler))


if __name__ == "__main__":
    main()
